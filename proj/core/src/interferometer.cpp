#include "curlicue/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "curlicue/errors.hpp"
#include "curlicue/parallel.hpp"
#include "curlicue/version.hpp"

namespace curlicue {

namespace {

enum class NoiseStream : std::uint64_t { MirrorPlacement = 1, Detector = 2 };

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// One independent standard normal per (seed, stream, index), so draws never
// depend on evaluation order.
double standard_normal(std::uint64_t seed, NoiseStream stream, std::uint64_t index) {
    std::uint64_t key = splitmix64(seed);
    key = splitmix64(key ^ static_cast<std::uint64_t>(stream));
    key = splitmix64(key ^ index);
    std::mt19937_64 engine(key);
    std::normal_distribution<double> normal(0.0, 1.0);
    return normal(engine);
}

}  // namespace

void InterferometerConfig::validate() const {
    if (!(displacement_unit_nm > 0.0) || !std::isfinite(displacement_unit_nm)) {
        throw InvalidArgument("displacement unit must be positive");
    }
    if (!(reference_length_nm >= 0.0) || !std::isfinite(reference_length_nm)) {
        throw InvalidArgument("reference length must be non-negative");
    }
}

void SpectralWindow::validate() const {
    if (!(lambda_min_nm > 0.0) || !std::isfinite(lambda_max_nm) || !(lambda_min_nm < lambda_max_nm)) {
        throw InvalidArgument("spectral window requires 0 < lambda_min < lambda_max");
    }
    if (pixel_count < 2) throw InvalidArgument("spectral window needs at least 2 pixels");
}

void NoiseModel::validate(int path_count) const {
    if (!(mirror_sigma_nm >= 0.0) || !(detector_sigma >= 0.0)) {
        throw InvalidArgument("noise sigmas must be non-negative");
    }
    if (arm_weights.empty()) return;
    if (static_cast<int>(arm_weights.size()) != path_count) {
        throw InvalidArgument("expected one arm weight per path");
    }
    double total = 0.0;
    for (double w : arm_weights) {
        if (!(w >= 0.0)) throw InvalidArgument("arm weights must be non-negative");
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12) throw InvalidArgument("arm weights must sum to 1");
}

void Interferogram::validate() const {
    if (!(displacement_unit_nm > 0.0)) throw InvalidArgument("displacement unit must be positive");
    if (samples.size() < 2) throw InvalidArgument("interferogram needs at least 2 samples");
    const double ceiling = 1.0 + 5.0 * provenance.detector_sigma;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const auto& s = samples[j];
        if (!std::isfinite(s.lambda_nm) || !(s.lambda_nm > 0.0)) {
            throw InvalidArgument("sample " + std::to_string(j) + " has a non-positive wavelength");
        }
        if (j > 0 && !(samples[j - 1].lambda_nm < s.lambda_nm)) {
            throw InvalidArgument("samples must be strictly increasing in wavelength");
        }
        if (!(s.intensity >= 0.0 && s.intensity <= ceiling)) {
            throw InvalidArgument("sample " + std::to_string(j) + " intensity out of range");
        }
    }
}

double path_length(const InterferometerConfig& config, int m) {
    const int paths = config.sum_spec.path_count();
    if (m < 1 || m > paths) {
        throw IndexOutOfRange("arm index " + std::to_string(m) + " outside [1, " +
                              std::to_string(paths) + "]");
    }
    const double power = std::pow(static_cast<double>(m - 1), config.sum_spec.order());
    return config.reference_length_nm + power * config.displacement_unit_nm;
}

int min_pixels(const InterferometerConfig& config, const SpectralWindow& window) {
    config.validate();
    window.validate();
    const double guard = main_lobe_halfwidth(config.sum_spec) / 4.0;
    const double x = config.displacement_unit_nm;
    const double span = window.lambda_max_nm - window.lambda_min_nm;
    const double lmin2 = window.lambda_min_nm * window.lambda_min_nm;
    auto fits = [&](double pixels) { return x * (span / pixels) / lmin2 <= guard; };

    double pixels = std::max(2.0, std::ceil(x * span / (lmin2 * guard)));
    while (!fits(pixels)) pixels += 1.0;
    while (pixels > 2.0 && fits(pixels - 1.0)) pixels -= 1.0;
    if (pixels > static_cast<double>(std::numeric_limits<int>::max())) {
        throw InvalidArgument("required pixel count exceeds the supported range");
    }
    return static_cast<int>(pixels);
}

Interferogram simulate(const InterferometerConfig& config, const SpectralWindow& window,
                       const std::optional<NoiseModel>& noise, SimulateOptions options) {
    config.validate();
    window.validate();
    const SumSpec& spec = config.sum_spec;
    const int paths = spec.path_count();
    if (noise) noise->validate(paths);

    if (!options.allow_undersampled) {
        const int required = min_pixels(config, window);
        if (window.pixel_count < required) {
            std::ostringstream msg;
            msg << "window has " << window.pixel_count << " pixels but at least " << required
                << " are needed to resolve the main lobe";
            throw UnderSampled(msg.str(), required);
        }
    }

    Interferogram out;
    out.displacement_unit_nm = config.displacement_unit_nm;
    out.sum_spec = spec;
    out.samples.resize(static_cast<std::size_t>(window.pixel_count));
    out.provenance.reference_length_nm = config.reference_length_nm;
    out.provenance.generator = std::string(kGeneratorName);

    const double x = config.displacement_unit_nm;

    if (!noise) {
        parallel_for(out.samples.size(), options.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t j = begin; j < end; ++j) {
                const double lambda = window.pixel_center_nm(static_cast<int>(j));
                out.samples[j] = {lambda, intensity(spec, x / lambda)};
            }
        });
        return out;
    }

    const NoiseModel& model = *noise;
    out.provenance.seed = model.seed;
    out.provenance.mirror_sigma_nm = model.mirror_sigma_nm;
    out.provenance.detector_sigma = model.detector_sigma;
    out.provenance.arm_weights = model.arm_weights;

    std::vector<double> weights = model.arm_weights;
    if (weights.empty()) weights.assign(static_cast<std::size_t>(paths), 1.0 / paths);

    // Static calibration residual per arm. The common reference length only
    // contributes a global phase and is left out of the sum.
    std::vector<double> offsets(static_cast<std::size_t>(paths), 0.0);
    if (model.mirror_sigma_nm > 0.0) {
        for (int m = 0; m < paths; ++m) {
            offsets[m] = model.mirror_sigma_nm *
                         standard_normal(model.seed, NoiseStream::MirrorPlacement,
                                         static_cast<std::uint64_t>(m));
        }
    }
    const double ceiling = 1.0 + 5.0 * model.detector_sigma;
    parallel_for(out.samples.size(), options.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            const double lambda = window.pixel_center_nm(static_cast<int>(j));
            const double tau = wrap_unit(x / lambda);
            std::complex<double> field = 0.0;
            for (int m = 0; m < paths; ++m) {
                const double cycles = reduced_phase(m, spec.order(), tau) + offsets[m] / lambda;
                const double angle = 2.0 * std::numbers::pi * cycles;
                field += weights[m] * std::complex<double>(std::cos(angle), std::sin(angle));
            }
            double value = std::norm(field);
            if (model.detector_sigma > 0.0) {
                value += model.detector_sigma *
                         standard_normal(model.seed, NoiseStream::Detector, j);
                value = std::clamp(value, 0.0, ceiling);
            }
            out.samples[j] = {lambda, value};
        }
    });
    return out;
}

}  // namespace curlicue
