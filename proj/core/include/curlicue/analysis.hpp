#pragma once

// From one interferogram to factorizations.
//
// A dominant maximum at wavelength lambda marks an integer ratio q = x/lambda.
// Rescaling the wavelength axis to xi_N = N * lambda / x puts that maximum at
// xi_N = N / q, which is an integer exactly when q divides N. Peaks do not
// depend on N, so one detection pass serves any number of targets.

#include <cstdint>
#include <span>
#include <vector>

#include "curlicue/interferometer.hpp"

namespace curlicue {

inline constexpr double kDefaultThreshold = 0.7;
inline constexpr double kDefaultEpsilon = 0.05;

struct RescaledPoint {
    double xi;
    double intensity;
};

struct RescaledInterferogram {
    std::int64_t target;
    std::vector<RescaledPoint> points;
};

struct PeakCandidate {
    double lambda_peak_nm;
    double intensity_peak;
    std::int64_t q;
    double residual;

    friend bool operator==(const PeakCandidate&, const PeakCandidate&) = default;
};

/// Integer ratios q = x / lambda reachable in a window; empty when q_min > q_max.
struct QWindow {
    std::int64_t q_min;
    std::int64_t q_max;

    bool empty() const noexcept { return q_min > q_max; }
    bool contains(std::int64_t q) const noexcept { return q_min <= q && q <= q_max; }
    friend bool operator==(const QWindow&, const QWindow&) = default;
};

struct FactorPair {
    std::int64_t q;
    std::int64_t cofactor;

    friend auto operator<=>(const FactorPair&, const FactorPair&) = default;
};

struct FactorDiagnostics {
    double threshold;
    double epsilon;
    std::size_t peak_count;
    std::size_t gated_count;
    std::size_t verified_count;
};

struct FactorReport {
    std::int64_t n;
    QWindow q_window;
    std::vector<PeakCandidate> candidates;
    std::vector<FactorPair> factors;
    FactorDiagnostics diagnostics;
};

/// Relabels the wavelength axis as xi_N = N * lambda / x. Throws
/// InvalidArgument for n < 2.
RescaledInterferogram rescale(const Interferogram& ig, std::int64_t n);

/// Strict interior local maxima at or above threshold, refined with a
/// three-point parabola. One candidate per q (the brightest), ascending in q.
std::vector<PeakCandidate> detect_peaks(const Interferogram& ig,
                                        double threshold = kDefaultThreshold);

/// [ceil(x / lambda_max), floor(x / lambda_min)]. Throws EmptyWindow when empty.
QWindow q_window(double x_nm, const SpectralWindow& window);

/// q-window spanned by the first and last sample of an interferogram. Never throws.
QWindow sampled_q_window(const Interferogram& ig);

/// Verifies the peaks of one interferogram against N. A pair (q, N/q) is
/// reported only when |residual| <= epsilon, q lies in the window,
/// 1 < q < N and N % q == 0.
FactorReport extract_factors(const Interferogram& ig, std::int64_t n,
                             double threshold = kDefaultThreshold,
                             double epsilon = kDefaultEpsilon);

/// Same as extract_factors but starting from already detected peaks.
FactorReport factor_from_peaks(std::span<const PeakCandidate> peaks, QWindow window,
                               std::int64_t n, double threshold, double epsilon);

/// One report per target from a single detect_peaks pass.
std::vector<FactorReport> scan_targets(const Interferogram& ig,
                                       std::span<const std::int64_t> targets,
                                       double threshold = kDefaultThreshold,
                                       double epsilon = kDefaultEpsilon);

}  // namespace curlicue
