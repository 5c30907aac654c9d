#include "cli/report_json.hpp"

#include <sstream>

#include "cli/number_format.hpp"

namespace curlicue::cli {

Json to_json(const FactorReport& report) {
    Json factors = Json::array();
    for (const auto& f : report.factors) factors.push_back({f.q, f.cofactor});
    Json candidates = Json::array();
    for (const auto& c : report.candidates) {
        candidates.push_back({{"lambda_peak", c.lambda_peak_nm},
                              {"intensity", c.intensity_peak},
                              {"q", c.q},
                              {"residual", c.residual}});
    }
    Json out;
    out["n"] = report.n;
    out["q_window"] = {report.q_window.q_min, report.q_window.q_max};
    out["factors"] = std::move(factors);
    out["candidates"] = std::move(candidates);
    out["params"] = {{"threshold", report.diagnostics.threshold},
                     {"epsilon", report.diagnostics.epsilon}};
    return out;
}

Json to_json(const std::vector<FactorReport>& reports) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    return out;
}

Json to_json(const MeasurementPlan& plan, const SpectralWindow& window) {
    Json runs = Json::array();
    for (const auto& run : plan.runs) {
        runs.push_back({{"x_nm", run.displacement_unit_nm},
                        {"xi_interval", {run.xi_lo, run.xi_hi}}});
    }
    Json out;
    out["scheme"] = plan.scheme == PlanScheme::SingleNumber ? "single-number" : "number-range";
    out["ratio_name"] = plan.scheme == PlanScheme::SingleNumber ? "beta" : "gamma";
    out["ratio"] = plan.ratio;
    out["n_runs"] = plan.run_count();
    out["lambda_min_nm"] = window.lambda_min_nm;
    out["lambda_max_nm"] = window.lambda_max_nm;
    out["runs"] = std::move(runs);
    return out;
}

Json to_json(const DisplacementEstimate& estimate, int digits, double lambda_min_nm) {
    const char* scale = "comparable";
    if (estimate.comparison == UniverseScale::Smaller) scale = "smaller";
    if (estimate.comparison == UniverseScale::Larger) scale = "larger";
    Json out;
    out["digits"] = digits;
    out["lambda_min_nm"] = lambda_min_nm;
    out["x0_m"] = {{"mantissa", estimate.meters.mantissa}, {"exponent", estimate.meters.exponent}};
    out["log10_x0_m"] = estimate.meters.log10();
    out["universe_m"] = {{"mantissa", 1}, {"exponent", kUniverseSizeExponentMeters}};
    out["orders_beyond_universe"] = estimate.orders_beyond_universe;
    out["universe_scale"] = scale;
    return out;
}

Json to_json(const Factorization& factorization) {
    Json powers = Json::array();
    for (const auto& [p, e] : factorization.prime_powers) powers.push_back({p, e});
    Json out;
    out["n"] = factorization.n;
    out["prime"] = factorization.is_prime();
    out["prime_powers"] = std::move(powers);
    out["divisors"] = factorization.divisors();
    return out;
}

std::string to_text(const FactorReport& report) {
    std::ostringstream out;
    out << "N = " << report.n << '\n';
    out << "q window: [" << report.q_window.q_min << ", " << report.q_window.q_max << "]\n";
    out << "peaks: " << report.diagnostics.peak_count << " (threshold "
        << format_double(report.diagnostics.threshold) << "), within epsilon "
        << format_double(report.diagnostics.epsilon) << ": " << report.diagnostics.gated_count
        << '\n';
    for (const auto& c : report.candidates) {
        out << "  q=" << c.q << "  lambda=" << format_fixed(c.lambda_peak_nm, 6)
            << " nm  I=" << format_fixed(c.intensity_peak, 4)
            << "  residual=" << format_fixed(c.residual, 6) << '\n';
    }
    if (report.factors.empty()) {
        out << "no factors found\n";
    } else {
        for (const auto& f : report.factors) {
            out << report.n << " = " << f.q << " x " << f.cofactor << '\n';
        }
    }
    return out.str();
}

}  // namespace curlicue::cli
