#pragma once

// Path-component evidence. u > 0 exactly on the open disks, so a path of
// Poisson diffeomorphisms moving p(n,1) must keep the image inside the rank-two
// region; a discrete path that reaches p(n,2) has to cross a point where u
// vanishes on a neighborhood.

#include <optional>
#include <string>
#include <vector>

#include "pdlab/diffeo.hpp"
#include "pdlab/verify/grid.hpp"

namespace pdlab::verify {

enum class PathVerdict { confined, leaves_rank_two, inconclusive };

std::string to_string(PathVerdict verdict);
nlohmann::json location_json(const SupportLocation& loc);

struct PathCertificate {
  int n = 0;
  std::vector<Point> path;
  double h = 0.0;
  PathVerdict verdict = PathVerdict::inconclusive;
  Rational gap_lower;  ///< certified lower bound on the gap between neighboring level-n disks
  std::optional<std::size_t> witness_index;
  std::string reason;

  nlohmann::json to_json(bool include_path = false) const;
};

/// Points a, a + h', ..., b with the fewest equal steps h' <= h.
std::vector<Point> segment_path(Point a, Point b, double h);

/// Classifies a discrete path starting at p(n, 1). Confinement is reported only
/// when every point lies in the closed disk (n, 1) and h is below the certified
/// gap; a point located Outside is an obstruction witness. A step longer than h
/// makes the verdict inconclusive.
PathCertificate path_obstruction_check(const Arrangement& arrangement, int n, const std::vector<Point>& path,
                                       double h);

struct ComponentSeparation {
  int n = 0;
  int moving_word = 0;  ///< 1 or 2: the word with u_n = 1
  Point start;
  Point moved_image;
  Point fixed_image;
  SupportLocation moved_location;
  double moved_offset = 0.0;  ///< |moved image - p(n,2)|
  bool fixed_exactly = false;
  Rational gap_lower;
  bool succeeded = false;

  nlohmann::json to_json() const;
};

/// Uses the first level where the words differ. Throws UsageError on equal words.
ComponentSeparation distinct_component_witness(const RotationFamily& family, const Arrangement& arrangement,
                                               const BitWord& w1, const BitWord& w2);

struct WordDeviationReport {
  std::string word;
  int k = 0;
  double composed_norm = 0.0;   ///< sampled ||phi^u - id||_k from composed jets
  double summed_norm = 0.0;     ///< sampled ||sum u_n (phi_n - id)||_k
  double max_factor_norm = 0.0;
  double factor_norm_sum = 0.0;
  double pointwise_discrepancy = 0.0;  ///< max |composed - summed| over coefficients and samples
  double tail_bound = 0.0;             ///< c_k * sum_{i >= first active} i^(2k) / 2^i
  std::size_t samples = 0;

  nlohmann::json to_json() const;
};

/// c_k is the fitted constant of the twist bound used for tail_bound.
WordDeviationReport word_deviation_norm(const RotationFamily& family, const BitWord& word, int k, double c_k,
                                        Resolution res = {32, 128});

}  // namespace pdlab::verify
