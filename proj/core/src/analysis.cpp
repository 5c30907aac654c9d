#include "curlicue/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "curlicue/errors.hpp"

namespace curlicue {

namespace {

struct Vertex {
    double x;
    double y;
};

// Vertex of the parabola through three points with x0 < x1 < x2. Falls back to
// the middle point if the curvature is not negative.
Vertex parabola_vertex(double x0, double y0, double x1, double y1, double x2, double y2) {
    const double d0 = (y1 - y0) / (x1 - x0);
    const double d1 = (y2 - y1) / (x2 - x1);
    const double a = (d1 - d0) / (x2 - x0);
    if (!(a < 0.0)) return {x1, y1};
    // y = y1 + b (x - x1) + a (x - x1)^2 with b the slope at x1.
    const double b = d0 + a * (x1 - x0);
    const double shift = std::clamp(-b / (2.0 * a), x0 - x1, x2 - x1);
    return {x1 + shift, y1 + b * shift + a * shift * shift};
}

void require_target(std::int64_t n, std::int64_t minimum) {
    if (n < minimum) {
        throw InvalidArgument("target must be at least " + std::to_string(minimum) + ", got " +
                              std::to_string(n));
    }
}

}  // namespace

RescaledInterferogram rescale(const Interferogram& ig, std::int64_t n) {
    require_target(n, 2);
    RescaledInterferogram out{n, {}};
    out.points.reserve(ig.samples.size());
    const double scale = static_cast<double>(n) / ig.displacement_unit_nm;
    for (const auto& s : ig.samples) out.points.push_back({scale * s.lambda_nm, s.intensity});
    return out;
}

std::vector<PeakCandidate> detect_peaks(const Interferogram& ig, double threshold) {
    const auto& s = ig.samples;
    std::map<std::int64_t, PeakCandidate> by_q;
    for (std::size_t j = 1; j + 1 < s.size(); ++j) {
        const double y = s[j].intensity;
        if (!(y >= threshold && y > s[j - 1].intensity && y > s[j + 1].intensity)) continue;

        const Vertex v = parabola_vertex(s[j - 1].lambda_nm, s[j - 1].intensity, s[j].lambda_nm, y,
                                         s[j + 1].lambda_nm, s[j + 1].intensity);
        const PhaseDecomposition phase = decompose(ig.displacement_unit_nm / v.x);
        if (phase.k < 1) continue;

        const PeakCandidate candidate{v.x, v.y, phase.k, phase.tau};
        auto [it, inserted] = by_q.emplace(phase.k, candidate);
        if (!inserted && candidate.intensity_peak > it->second.intensity_peak) {
            it->second = candidate;
        }
    }

    std::vector<PeakCandidate> peaks;
    peaks.reserve(by_q.size());
    for (const auto& [q, peak] : by_q) peaks.push_back(peak);
    return peaks;
}

QWindow q_window(double x_nm, const SpectralWindow& window) {
    if (!(x_nm > 0.0)) throw InvalidArgument("displacement unit must be positive");
    if (!(window.lambda_min_nm > 0.0 && window.lambda_min_nm < window.lambda_max_nm)) {
        throw InvalidArgument("spectral window requires 0 < lambda_min < lambda_max");
    }
    const QWindow w{static_cast<std::int64_t>(std::ceil(x_nm / window.lambda_max_nm)),
                    static_cast<std::int64_t>(std::floor(x_nm / window.lambda_min_nm))};
    if (w.empty()) {
        throw EmptyWindow("no integer ratio x/lambda lies in the window (q_min=" +
                          std::to_string(w.q_min) + ", q_max=" + std::to_string(w.q_max) + ")");
    }
    return w;
}

QWindow sampled_q_window(const Interferogram& ig) {
    if (ig.samples.empty()) return {1, 0};
    const double x = ig.displacement_unit_nm;
    return {static_cast<std::int64_t>(std::ceil(x / ig.samples.back().lambda_nm)),
            static_cast<std::int64_t>(std::floor(x / ig.samples.front().lambda_nm))};
}

FactorReport factor_from_peaks(std::span<const PeakCandidate> peaks, QWindow window,
                               std::int64_t n, double threshold, double epsilon) {
    require_target(n, 4);
    FactorReport report{n, window, {peaks.begin(), peaks.end()}, {}, {threshold, epsilon, 0, 0, 0}};
    report.diagnostics.peak_count = peaks.size();
    for (const auto& peak : peaks) {
        if (!(std::fabs(peak.residual) <= epsilon) || !window.contains(peak.q)) continue;
        ++report.diagnostics.gated_count;
        const std::int64_t q = peak.q;
        if (q <= 1 || q >= n || n % q != 0) continue;
        report.factors.push_back({q, n / q});
    }
    std::sort(report.factors.begin(), report.factors.end());
    report.factors.erase(std::unique(report.factors.begin(), report.factors.end()),
                         report.factors.end());
    report.diagnostics.verified_count = report.factors.size();
    return report;
}

FactorReport extract_factors(const Interferogram& ig, std::int64_t n, double threshold,
                             double epsilon) {
    require_target(n, 4);
    const auto peaks = detect_peaks(ig, threshold);
    return factor_from_peaks(peaks, sampled_q_window(ig), n, threshold, epsilon);
}

std::vector<FactorReport> scan_targets(const Interferogram& ig,
                                       std::span<const std::int64_t> targets, double threshold,
                                       double epsilon) {
    if (targets.empty()) throw InvalidArgument("at least one target is required");
    for (auto n : targets) require_target(n, 4);
    const auto peaks = detect_peaks(ig, threshold);
    const QWindow window = sampled_q_window(ig);
    std::vector<FactorReport> reports;
    reports.reserve(targets.size());
    for (auto n : targets) reports.push_back(factor_from_peaks(peaks, window, n, threshold, epsilon));
    return reports;
}

}  // namespace curlicue
