#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "curlicue/analysis.hpp"
#include "curlicue/oracle.hpp"
#include "curlicue/planner.hpp"

namespace curlicue::cli {

using Json = nlohmann::ordered_json;

/// {n, q_window:[lo,hi], factors:[[q,c],...],
///  candidates:[{lambda_peak,intensity,q,residual},...], params:{threshold,epsilon}}
Json to_json(const FactorReport& report);
Json to_json(const std::vector<FactorReport>& reports);
Json to_json(const MeasurementPlan& plan, const SpectralWindow& window);
Json to_json(const DisplacementEstimate& estimate, int digits, double lambda_min_nm);
Json to_json(const Factorization& factorization);

/// Human-readable rendering of a factor report.
std::string to_text(const FactorReport& report);

}  // namespace curlicue::cli
