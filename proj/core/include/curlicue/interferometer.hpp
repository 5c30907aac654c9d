#pragma once

// Forward model of the symmetric multi-path Michelson interferometer.
//
// Arm m (1-based) has length r + (m-1)^d * x. With the reference mirror
// blocked, the M remaining arms interfere at the exit port and a spectrometer
// reads the intensity on a uniform pixel grid in wavelength.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curlicue/expsum.hpp"

namespace curlicue {

struct InterferometerConfig {
    double reference_length_nm = 0.0;
    double displacement_unit_nm = 0.0;
    SumSpec sum_spec{3, 2};

    /// Throws InvalidArgument unless x > 0 and r >= 0.
    void validate() const;
};

struct SpectralWindow {
    double lambda_min_nm = 0.0;
    double lambda_max_nm = 0.0;
    int pixel_count = 2048;

    void validate() const;
    double pixel_spacing_nm() const { return (lambda_max_nm - lambda_min_nm) / pixel_count; }
    /// Pixel centers sit at half-integer offsets from lambda_min.
    double pixel_center_nm(int j) const {
        return lambda_min_nm + (j + 0.5) * pixel_spacing_nm();
    }
};

struct NoiseModel {
    /// Std. deviation of the static per-arm mirror placement error.
    double mirror_sigma_nm = 0.0;
    /// Per-arm amplitude weights summing to 1. Empty means equal weights.
    std::vector<double> arm_weights;
    /// Std. deviation of additive per-pixel detector noise.
    double detector_sigma = 0.0;
    std::uint64_t seed = 0;

    void validate(int path_count) const;
};

struct Sample {
    double lambda_nm;
    double intensity;

    friend bool operator==(const Sample&, const Sample&) = default;
};

/// Where an interferogram came from. `extra` keeps header keys this version
/// does not interpret, in file order.
struct Provenance {
    double reference_length_nm = 0.0;
    std::uint64_t seed = 0;
    double mirror_sigma_nm = 0.0;
    double detector_sigma = 0.0;
    std::vector<double> arm_weights;
    std::string generator;
    std::vector<std::pair<std::string, std::string>> extra;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Interferogram {
    double displacement_unit_nm = 0.0;
    SumSpec sum_spec{3, 2};
    std::vector<Sample> samples;
    Provenance provenance;

    /// Throws InvalidArgument if samples are not strictly increasing in
    /// wavelength, there are fewer than two, or an intensity falls outside
    /// [0, 1 + 5 * detector_sigma].
    void validate() const;

    friend bool operator==(const Interferogram&, const Interferogram&) = default;
};

struct SimulateOptions {
    bool allow_undersampled = false;
    /// 0 selects default_thread_count().
    unsigned threads = 0;
};

/// r + (m-1)^d * x. Throws IndexOutOfRange unless 1 <= m <= M.
double path_length(const InterferometerConfig& config, int m);

/// Smallest pixel count whose xi-grid spacing x * dlambda / lambda_min^2 is at
/// most a quarter of the main-lobe half-width.
int min_pixels(const InterferometerConfig& config, const SpectralWindow& window);

/// Samples I(lambda; x) at every pixel center. Without a noise model the
/// result equals intensity(spec, x / lambda_j) exactly. Output does not
/// depend on the thread count. Throws UnderSampled when the window has fewer
/// than min_pixels() pixels and the override is not set.
Interferogram simulate(const InterferometerConfig& config, const SpectralWindow& window,
                       const std::optional<NoiseModel>& noise, SimulateOptions options = {});

}  // namespace curlicue
