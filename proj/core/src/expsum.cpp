#include "curlicue/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "curlicue/errors.hpp"

namespace curlicue {

SumSpec::SumSpec(int paths, int order) : path_count_(paths), order_(order) {
    if (paths < 2) {
        throw InvalidArgument("path count must be at least 2, got " + std::to_string(paths));
    }
    if (order < 2) {
        throw InvalidArgument("polynomial order must be at least 2, got " + std::to_string(order));
    }
}

double wrap_unit(double xi) {
    // Exact for |xi| < 2^52; beyond that every double is an integer.
    double k = std::floor(xi);
    double f = xi - k;
    if (f >= 0.5) f -= 1.0;
    return f;
}

double reduced_phase(std::int64_t base, int order, double tau) {
    if (base == 0) return 0.0;
    double p = wrap_unit(tau);
    const double b = static_cast<double>(base);
    for (int i = 0; i < order; ++i) p = wrap_unit(p * b);
    return p;
}

namespace {

std::complex<double> unit_phasor(double cycles) {
    const double angle = 2.0 * std::numbers::pi * cycles;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::complex<double> evaluate(const SumSpec& spec, double xi) {
    const double tau = wrap_unit(xi);
    std::complex<double> sum = 0.0;
    for (int m = 0; m < spec.path_count(); ++m) {
        sum += unit_phasor(reduced_phase(m, spec.order(), tau));
    }
    return sum / static_cast<double>(spec.path_count());
}

double intensity(const SumSpec& spec, double xi) {
    return std::norm(evaluate(spec, xi));
}

PhaseDecomposition decompose(double xi) {
    if (!std::isfinite(xi) || std::fabs(xi) >= kPrecisionCeiling) {
        throw PrecisionExceeded("phase argument " + std::to_string(xi) +
                                " exceeds the precision ceiling 2^40");
    }
    double k = std::floor(xi);
    double tau = xi - k;
    if (tau >= 0.5) {
        k += 1.0;
        tau -= 1.0;
    }
    return {static_cast<std::int64_t>(k), tau};
}

double main_lobe_halfwidth(const SumSpec& spec) {
    // Step well below the expected lobe width ~ 1/(M-1)^d, then bisect the
    // first bracket where intensity crosses 1/2.
    const double scale = std::pow(static_cast<double>(spec.path_count() - 1), spec.order());
    const double step = std::max(1.0 / (32.0 * scale), 1e-7);

    double lo = 0.0;
    double hi = step;
    while (hi < 0.5 && intensity(spec, hi) >= 0.5) {
        lo = hi;
        hi += step;
    }
    if (hi > 0.5) hi = 0.5;

    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (intensity(spec, mid) >= 0.5) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace curlicue
