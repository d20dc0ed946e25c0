#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"
#include "wignerbell/experiment.hpp"
#include "wignerbell/quantum.hpp"

namespace wignerbell::cli {

/// Shortest decimal that round-trips.
std::string format_double(double value);

enum class TableFormat { Text, Csv, Json };

std::string render_table(TableFormat format);

// Header: theta,lhs,rhs,slack,violated
std::string render_scan_csv(const std::vector<ScanPoint>& points);

// Header: setting,alice,alice_sign,bob,bob_sign,pairs,count_pp,count_pm,
//         count_mp,count_mm,hits,p_hat,std_error
std::string render_estimate_csv(const EstimateReport& report);

/// Superset of the CSV columns plus the inequality summary, the model
/// expectation, and the resolved config. No timestamps.
nlohmann::ordered_json estimate_to_json(const LoadedConfig& config, const EstimateReport& report);

// Header: pairs,repetitions,violations,rate,ci_lo,ci_hi,significant_violations
std::string render_curve_csv(const ViolationCurve& curve);

nlohmann::ordered_json curve_to_json(const LoadedConfig& config, const ViolationCurve& curve);

/// Violation rate against log10(n) with the Wilson band as error bars.
std::string render_curve_svg(const ViolationCurve& curve);

}  // namespace wignerbell::cli
