#pragma once

// Verification suites and their JSON report. Reports contain no timings or
// host data, so identical configurations give byte-identical output.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdlab/bump.hpp"
#include "pdlab/verify/grid.hpp"
#include "pdlab/verify/sampling.hpp"

namespace pdlab::verify {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  int n_max = 20;
  int jet_order = 4;        ///< highest k reported by the fits
  int gated_order = 2;      ///< fits with k <= gated_order decide pass/fail
  Resolution bump_resolution{64, 64};
  Resolution series_resolution{64, 64};
  Resolution shell_resolution{128, 256};
  int precision_bits = 1024;
  std::uint64_t seed = kDefaultSeed;
  std::size_t invariance_samples = 100000;
  std::size_t fibered_samples = 10000;
  int word_pairs = 100;
  std::string out_dir = "pdlab-out";
  std::set<std::string> formats{"json"};
  CutoffShape cutoff = CutoffShape::smooth;
  TwistSchedule schedule{};

  /// Throws UsageError on out-of-range settings.
  void validate() const;
  nlohmann::json to_json() const;
};

enum class CheckStatus { pass, fail, indeterminate };

std::string to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json value;
  nlohmann::json tolerance;
  nlohmann::json detail;
  bool gating = true;  ///< non-gating checks are reported but do not affect the status

  nlohmann::json to_json() const;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  nlohmann::json data;  ///< tables for the csv and md reports

  CheckStatus status() const;
  nlohmann::json to_json() const;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"geometry", "norms", "invariance", "obstruction", "fibered"};
  return names;
}

SuiteResult run_geometry(const RunConfig& config);
SuiteResult run_norms(const RunConfig& config);
SuiteResult run_invariance(const RunConfig& config);
SuiteResult run_obstruction(const RunConfig& config);
SuiteResult run_fibered(const RunConfig& config);

/// `suite` is one of suite_names() or "all".
std::vector<SuiteResult> run_suite(const std::string& suite, const RunConfig& config);

CheckStatus overall_status(const std::vector<SuiteResult>& results);
nlohmann::json make_report(const RunConfig& config, const std::vector<SuiteResult>& results);

/// 0 pass, 1 fail, 2 indeterminate.
int exit_code(CheckStatus status);

}  // namespace pdlab::verify
