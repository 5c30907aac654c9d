#pragma once

#include <string_view>

namespace curlicue {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kGeneratorName = "curlicue-core 0.1.0";

}  // namespace curlicue
