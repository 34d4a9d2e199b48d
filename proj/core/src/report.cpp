#include "pdlab/report.hpp"

#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

#include "pdlab/types.hpp"
#include "pdlab/verify/suite.hpp"

namespace pdlab {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const nlohmann::json* norms_data(const nlohmann::json& report) {
  const auto& suites = report.at("suites");
  if (!suites.contains("norms") || !suites["norms"].contains("data")) return nullptr;
  return &suites["norms"]["data"];
}

// Statements and the check-name prefixes that decide them.
const std::vector<std::pair<std::string, std::vector<std::string>>>& statements() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> s{
      {"Annuli are disjoint and contain their disks", {"geometry/annuli_disjoint", "geometry/disk_in_annulus"}},
      {"Neighboring disks are separated", {"geometry/adjacent_gap_positive"}},
      {"Twist supports are disjoint and rigid on the disks",
       {"geometry/twist_certificate", "geometry/twist_supports_disjoint"}},
      {"Bump norms scale like delta^-k", {"norms/bump."}},
      {"Level terms obey n^k 2^(nk) / n!", {"norms/series.", "norms/series_tail"}},
      {"Twist deviations obey n^(2k) / 2^n", {"norms/phi_minus_id.", "norms/f_n.", "norms/exp_f_minus_1.", "norms/phi_c0_bound"}},
      {"Twists converge to the identity", {"norms/phi_monotone."}},
      {"Twists preserve the bivector", {"invariance/"}},
      {"Paths of Poisson maps cannot move p(n,1) to p(n,2)", {"obstruction/path"}},
      {"Distinct words lie in distinct components",
       {"obstruction/distinct_components", "obstruction/word_deviation_sum", "norms/tail_epsilon_monotone"}},
      {"Fibered example: twists preserve f and permute components", {"fibered/"}},
  };
  return s;
}

}  // namespace

void validate_report(const nlohmann::json& report) {
  if (!report.is_object() || !report.contains("schema_version") || !report.contains("suites") ||
      !report.contains("config") || !report.contains("status"))
    throw UsageError("not a pdlab verify report");
  if (report["schema_version"] != verify::kSchemaVersion) throw UsageError("unsupported report schema version");
}

std::string fits_csv(const nlohmann::json& report) {
  validate_report(report);
  std::ostringstream out;
  out << "family,k,level,parameter,measured,shape,ratio\n";
  if (const auto* data = norms_data(report)) {
    for (const auto& row : data->at("fits"))
      out << row[0].get<std::string>() << "," << row[1].get<int>() << "," << row[2].get<std::string>() << ","
          << num(row[3]) << "," << num(row[4]) << "," << num(row[5]) << "," << num(row[6]) << "\n";
  }
  return out.str();
}

std::string phi_deviation_csv(const nlohmann::json& report) {
  validate_report(report);
  std::ostringstream out;
  out << "n,k,measured,shape,ratio\n";
  if (const auto* data = norms_data(report)) {
    for (const auto& row : data->at("fits")) {
      if (row[0] != "phi_minus_id" || row[2] != "fine") continue;
      out << static_cast<int>(row[3].get<double>()) << "," << row[1].get<int>() << "," << num(row[4]) << ","
          << num(row[5]) << "," << num(row[6]) << "\n";
    }
  }
  return out.str();
}

std::string checks_csv(const nlohmann::json& report) {
  validate_report(report);
  std::ostringstream out;
  out << "suite,check,status,gating\n";
  for (const auto& [suite, body] : report["suites"].items())
    for (const auto& c : body["checks"])
      out << suite << "," << c["name"].get<std::string>() << "," << c["status"].get<std::string>() << ","
          << (c["gating"].get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

std::string markdown_summary(const nlohmann::json& report) {
  validate_report(report);
  std::ostringstream out;
  out << "# pdlab verification summary\n\n";
  out << "Overall status: **" << report["status"].get<std::string>() << "**\n\n";
  out << "| Statement | Status |\n|---|---|\n";
  for (const auto& [title, prefixes] : statements()) {
    int seen = 0;
    std::string status = "pass";
    for (const auto& [suite, body] : report["suites"].items()) {
      for (const auto& c : body["checks"]) {
        if (!c["gating"].get<bool>()) continue;
        const std::string key = suite + "/" + c["name"].get<std::string>();
        bool match = false;
        for (const auto& p : prefixes) match = match || key.rfind(p, 0) == 0;
        if (!match) continue;
        ++seen;
        const std::string s = c["status"];
        if (s == "fail") status = "fail";
        else if (s == "indeterminate" && status == "pass") status = "indeterminate";
      }
    }
    out << "| " << title << " | " << (seen ? status : "not run") << " |\n";
  }
  out << "\n## Checks\n\n| Suite | Check | Status |\n|---|---|---|\n";
  for (const auto& [suite, body] : report["suites"].items())
    for (const auto& c : body["checks"])
      out << "| " << suite << " | " << c["name"].get<std::string>() << " | " << c["status"].get<std::string>()
          << (c["gating"].get<bool>() ? "" : " (informational)") << " |\n";
  if (const auto* data = norms_data(report)) {
    out << "\n## Fitted constants (finest grid)\n\n| Family | C_0 .. C_k |\n|---|---|\n";
    for (const auto& [family, cs] : data->at("fitted_constants").items()) {
      out << "| " << family << " |";
      for (const auto& c : cs) out << " " << num(c.get<double>());
      out << " |\n";
    }
  }
  return out.str();
}

}  // namespace pdlab
