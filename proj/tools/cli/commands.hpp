#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curlicue::cli {

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kNoFactors = 1;
inline constexpr int kUsage = 2;
inline constexpr int kUnderSampled = 3;
inline constexpr int kPrecision = 4;
inline constexpr int kInsufficientBandwidth = 5;
}  // namespace exit_code

/// Runs one curlicue command. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curlicue::cli
