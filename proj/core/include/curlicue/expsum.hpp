#pragma once

// Normalized truncated exponential sums
//
//     s(xi) = (1/M) * sum_{m=1..M} exp(2 pi i (m-1)^d xi)
//
// for M interfering paths whose lengths grow as (m-1)^d. With d = 2 this is
// the curlicue (quadratic Gauss) sum; |s|^2 is the interferometer output.

#include <complex>
#include <cstdint>

namespace curlicue {

/// Path count M and polynomial order d of the sum. Always valid once built.
class SumSpec {
public:
    /// Throws InvalidArgument unless paths >= 2 and order >= 2.
    explicit SumSpec(int paths, int order = 2);

    int path_count() const noexcept { return path_count_; }
    int order() const noexcept { return order_; }

    friend bool operator==(const SumSpec&, const SumSpec&) = default;

private:
    int path_count_;
    int order_;
};

/// xi = k + tau with k the nearest integer and tau in [-1/2, 1/2).
struct PhaseDecomposition {
    std::int64_t k;
    double tau;

    friend bool operator==(const PhaseDecomposition&, const PhaseDecomposition&) = default;
};

/// decompose() refuses arguments at or above this magnitude.
inline constexpr double kPrecisionCeiling = 0x1p40;

std::complex<double> evaluate(const SumSpec& spec, double xi);

/// |evaluate(spec, xi)|^2, in [0, 1]; equals 1 exactly at integer xi.
double intensity(const SumSpec& spec, double xi);

/// Splits xi into nearest integer and residual. Ties go up: 2.5 -> (3, -0.5).
/// Throws PrecisionExceeded for |xi| >= kPrecisionCeiling or non-finite xi.
PhaseDecomposition decompose(double xi);

/// Distance from an integer at which intensity first drops below 1/2.
double main_lobe_halfwidth(const SumSpec& spec);

/// frac(base^order * tau) wrapped to [-1/2, 1/2), reduced one factor at a
/// time so large powers never lose the fractional part.
double reduced_phase(std::int64_t base, int order, double tau);

/// Residual of xi about its nearest integer for any finite xi (no ceiling).
double wrap_unit(double xi);

}  // namespace curlicue
