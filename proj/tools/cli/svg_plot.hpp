#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "curlicue/interferometer.hpp"

namespace curlicue::cli {

inline constexpr std::size_t kMaxPlotTargets = 2;

/// Line chart of intensity against wavelength with a q = x/lambda axis under
/// it. Each target N adds a rescaled xi_N axis with integer ticks (first one
/// at the bottom, second at the top) and dashed markers at verified factors.
/// Output depends only on the inputs. Throws InvalidArgument for more than
/// kMaxPlotTargets targets.
std::string render_interferogram_svg(const Interferogram& ig,
                                     std::span<const std::int64_t> targets);

}  // namespace curlicue::cli
