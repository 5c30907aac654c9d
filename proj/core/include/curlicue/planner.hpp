#pragma once

// Feasibility algebra for choosing displacement units.
//
// A window [lambda_min, lambda_max] with beta = lambda_max / lambda_min tests
// trial factors xi_N in [N lambda_min / x, N lambda_max / x]. Covering
// [1, sqrt(N)] in one shot caps N at beta^2; larger targets need several runs
// with geometrically shrinking x.

#include <cstdint>
#include <optional>
#include <vector>

#include "curlicue/interferometer.hpp"

namespace curlicue {

struct FactorableRange {
    double n_min;
    double n_max;
};

struct BandwidthSummary {
    double beta;
    double single_window_n_max;
};

enum class PlanScheme { SingleNumber, NumberRange };

struct PlannedRun {
    double displacement_unit_nm;
    double xi_lo;
    double xi_hi;
};

struct MeasurementPlan {
    PlanScheme scheme;
    /// beta for SingleNumber, gamma for NumberRange.
    double ratio;
    std::vector<PlannedRun> runs;

    std::size_t run_count() const noexcept { return runs.size(); }
};

/// Decimal scientific notation, mantissa in [1, 10).
struct ScientificValue {
    double mantissa;
    std::int64_t exponent;

    double log10() const;
};

enum class UniverseScale { Smaller, Comparable, Larger };

inline constexpr std::int64_t kUniverseSizeExponentMeters = 27;

struct DisplacementEstimate {
    ScientificValue meters;
    /// log10(estimate / 10^27 m).
    double orders_beyond_universe;
    /// Comparable when within one order of magnitude.
    UniverseScale comparison;
};

/// (x / lambda_max)^2 <= N <= x / lambda_min, or nullopt when empty.
std::optional<FactorableRange> factorable_range(double x_nm, const SpectralWindow& window);

/// lambda_max^2 / lambda_min, the largest x with a non-empty factorable range.
double max_displacement(const SpectralWindow& window);

BandwidthSummary bandwidth_summary(const SpectralWindow& window);

/// x_0 = N lambda_min, x_{i+1} = x_i / beta, run i covering [beta^i, beta^{i+1}],
/// with ceil(log_beta sqrt(N)) runs. Throws DegenerateBandwidth when
/// beta <= 1 + 1e-9 and InvalidArgument when N < 4.
MeasurementPlan plan_single_number(std::int64_t n, const SpectralWindow& window);

/// gamma = (N_min / N_max) beta, x_0 = N_max lambda_min, x_{i+1} = x_i / gamma.
/// Each run lists the trial-factor interval covered for every N in the range.
/// Throws InsufficientBandwidth when gamma <= 1.
MeasurementPlan plan_number_range(std::int64_t n_min, std::int64_t n_max,
                                  const SpectralWindow& window);

/// x_0 = 10^digits * lambda_min expressed in meters and compared with 10^27 m.
DisplacementEstimate displacement_estimate(int digits, double lambda_min_nm);

}  // namespace curlicue
