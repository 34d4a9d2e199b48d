#pragma once

// Sampled C^k norms: max over grid nodes, multi-indices |a| <= k and field
// components of |D^a f|. Every reported value is a lower bound of the true norm.

#include <functional>
#include <string>
#include <vector>

#include "pdlab/jets.hpp"
#include "pdlab/verify/grid.hpp"

namespace pdlab::verify {

/// Jets of several named fields at one point; outer index = field,
/// inner index = component.
using FieldBundle = std::function<std::vector<std::vector<RealJet>>(Point, int)>;

struct FieldSpec {
  std::string id;
  /// Component jets of the field at a point.
  std::function<std::vector<RealJet>(Point, int)> jets;
};

struct NormReport {
  std::string field;
  int k = 0;
  nlohmann::json grid;
  std::vector<MultiIndex> indices;
  std::vector<std::vector<double>> level_sups;  ///< [level][index] sampled sup of |D^a|
  std::vector<double> history;                  ///< sup over |a| <= k after each level
  std::vector<std::size_t> level_points;

  int levels() const { return static_cast<int>(level_sups.size()); }
  /// sup over |a| <= order at a level (default: finest).
  double sup(int order, int level = -1) const;
  /// sup over |a| == order exactly.
  double sup_exact_order(int order, int level = -1) const;
  double value() const { return history.empty() ? 0.0 : history.back(); }

  nlohmann::json to_json() const;
};

/// Worker threads for sampling; 0 means PDLAB_THREADS or hardware concurrency.
void set_thread_count(unsigned threads);
unsigned thread_count();

NormReport ck_norm_estimate(const FieldSpec& field, int k, const Grid& grid, int levels = 2);

std::vector<NormReport> ck_norm_estimate_many(const std::vector<std::string>& ids,
                                              const FieldBundle& bundle, int k, const Grid& grid,
                                              int levels = 2);

/// Component split of a complex jet.
std::vector<RealJet> components(const ComplexJet& j);

}  // namespace pdlab::verify
