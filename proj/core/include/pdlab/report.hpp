#pragma once

// Secondary report formats derived from a verify report.json.
//
// fits.csv          family,k,level,parameter,measured,shape,ratio
// phi_deviation.csv n,k,measured,shape,ratio          (finest grid)
// checks.csv        suite,check,status,gating
// summary.md        one line per verified statement, then every check

#include <string>

#include <json.hpp>

namespace pdlab {

/// Throws UsageError when the document is not a verify report of a known schema.
void validate_report(const nlohmann::json& report);

std::string fits_csv(const nlohmann::json& report);
std::string phi_deviation_csv(const nlohmann::json& report);
std::string checks_csv(const nlohmann::json& report);
std::string markdown_summary(const nlohmann::json& report);

}  // namespace pdlab
