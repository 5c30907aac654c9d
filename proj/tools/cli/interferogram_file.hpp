#pragma once

// Interferogram CSV, version 1:
//
//   # curlicue-interferogram v1
//   # x_nm=523426.8
//   # M=3
//   # d=2
//   # r_nm=0
//   # seed=0
//   # mirror_sigma_nm=0
//   # detector_sigma=0
//   lambda_nm,intensity
//   460.3607031,0.91...
//
// Further `# key=value` lines are allowed and survive a read/write cycle.
// Numbers are written in shortest round-trip form, so reading a written file
// reproduces every double bit for bit.

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "curlicue/errors.hpp"
#include "curlicue/interferometer.hpp"

namespace curlicue::cli {

inline constexpr std::string_view kInterferogramMagic = "# curlicue-interferogram v1";

class FormatError : public Error {
public:
    using Error::Error;
};

void write_interferogram(std::ostream& out, const Interferogram& ig);
Interferogram read_interferogram(std::istream& in);

void save_interferogram(const std::filesystem::path& path, const Interferogram& ig);
Interferogram load_interferogram(const std::filesystem::path& path);

}  // namespace curlicue::cli
