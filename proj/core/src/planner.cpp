#include "curlicue/planner.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "curlicue/errors.hpp"

namespace curlicue {

namespace {

constexpr double kBandwidthTolerance = 1e-9;

void validate_bounds(const SpectralWindow& window) {
    if (!(window.lambda_min_nm > 0.0) || !std::isfinite(window.lambda_max_nm) ||
        !(window.lambda_min_nm < window.lambda_max_nm)) {
        throw InvalidArgument("spectral window requires 0 < lambda_min < lambda_max");
    }
}

// Smallest n >= 1 with ratio^n >= target, tolerant to rounding in the powers.
int runs_to_cover(double ratio, double target) {
    int n = 1;
    double cover = ratio;
    while (cover < target * (1.0 - 1e-12)) {
        cover *= ratio;
        ++n;
    }
    return n;
}

}  // namespace

double ScientificValue::log10() const {
    return std::log10(mantissa) + static_cast<double>(exponent);
}

std::optional<FactorableRange> factorable_range(double x_nm, const SpectralWindow& window) {
    validate_bounds(window);
    if (!(x_nm > 0.0)) throw InvalidArgument("displacement unit must be positive");
    const double ratio = x_nm / window.lambda_max_nm;
    const FactorableRange range{ratio * ratio, x_nm / window.lambda_min_nm};
    if (range.n_min > range.n_max) return std::nullopt;
    return range;
}

double max_displacement(const SpectralWindow& window) {
    validate_bounds(window);
    return window.lambda_max_nm * window.lambda_max_nm / window.lambda_min_nm;
}

BandwidthSummary bandwidth_summary(const SpectralWindow& window) {
    validate_bounds(window);
    const double beta = window.lambda_max_nm / window.lambda_min_nm;
    return {beta, beta * beta};
}

MeasurementPlan plan_single_number(std::int64_t n, const SpectralWindow& window) {
    validate_bounds(window);
    if (n < 4) throw InvalidArgument("target must be at least 4, got " + std::to_string(n));
    const double beta = window.lambda_max_nm / window.lambda_min_nm;
    if (beta <= 1.0 + kBandwidthTolerance) {
        throw DegenerateBandwidth("bandwidth ratio lambda_max/lambda_min is too close to 1");
    }

    const double target = static_cast<double>(n);
    const int count = runs_to_cover(beta, std::sqrt(target));

    MeasurementPlan plan{PlanScheme::SingleNumber, beta, {}};
    plan.runs.reserve(static_cast<std::size_t>(count));
    double x = target * window.lambda_min_nm;
    for (int i = 0; i < count; ++i) {
        plan.runs.push_back({x, target * window.lambda_min_nm / x, target * window.lambda_max_nm / x});
        x /= beta;
    }
    return plan;
}

MeasurementPlan plan_number_range(std::int64_t n_min, std::int64_t n_max,
                                  const SpectralWindow& window) {
    validate_bounds(window);
    if (n_min < 4 || n_min >= n_max) {
        throw InvalidArgument("number range requires 4 <= N_min < N_max");
    }
    const double lo = static_cast<double>(n_min);
    const double hi = static_cast<double>(n_max);
    const double beta = window.lambda_max_nm / window.lambda_min_nm;
    const double gamma = lo * beta / hi;
    if (gamma <= 1.0 + kBandwidthTolerance) {
        const double needed = hi / lo;
        std::ostringstream msg;
        msg << "bandwidth ratio beta=" << beta << " gives gamma=" << gamma
            << "; covering [" << n_min << ", " << n_max << "] needs beta > " << needed;
        throw InsufficientBandwidth(msg.str(), needed);
    }

    const int count = runs_to_cover(gamma, std::sqrt(hi));
    MeasurementPlan plan{PlanScheme::NumberRange, gamma, {}};
    plan.runs.reserve(static_cast<std::size_t>(count));
    double x = hi * window.lambda_min_nm;
    for (int i = 0; i < count; ++i) {
        // Trial factors reached by every N in the range: the largest N sets the
        // lower edge, the smallest N the upper edge.
        plan.runs.push_back({x, hi * window.lambda_min_nm / x, lo * window.lambda_max_nm / x});
        x /= gamma;
    }
    return plan;
}

DisplacementEstimate displacement_estimate(int digits, double lambda_min_nm) {
    if (digits < 1) throw InvalidArgument("digit count must be at least 1");
    if (!(lambda_min_nm > 0.0) || !std::isfinite(lambda_min_nm)) {
        throw InvalidArgument("lambda_min must be positive");
    }
    // 10^digits * lambda_min [nm] = lambda_min * 10^(digits - 9) m.
    double mantissa = lambda_min_nm;
    std::int64_t exponent = static_cast<std::int64_t>(digits) - 9;
    while (mantissa >= 10.0) {
        mantissa /= 10.0;
        ++exponent;
    }
    while (mantissa < 1.0) {
        mantissa *= 10.0;
        --exponent;
    }

    DisplacementEstimate estimate{{mantissa, exponent}, 0.0, UniverseScale::Comparable};
    estimate.orders_beyond_universe =
        estimate.meters.log10() - static_cast<double>(kUniverseSizeExponentMeters);
    if (estimate.orders_beyond_universe <= -1.0) {
        estimate.comparison = UniverseScale::Smaller;
    } else if (estimate.orders_beyond_universe >= 1.0) {
        estimate.comparison = UniverseScale::Larger;
    }
    return estimate;
}

}  // namespace curlicue
