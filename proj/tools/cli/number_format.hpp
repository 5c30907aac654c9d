#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace curlicue::cli {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Fixed-point text with the given number of decimals.
std::string format_fixed(double value, int decimals);

std::optional<double> parse_double(std::string_view text);
std::optional<std::int64_t> parse_int64(std::string_view text);
std::optional<std::uint64_t> parse_uint64(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace curlicue::cli
