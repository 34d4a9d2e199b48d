#pragma once

// Fitted constants for the three bound shapes
//   bump:   ||pi_{p,delta}||_k <= C_k delta^{-k}
//   series: ||pi_n||_k         <= C_k n^k 2^{nk} / n!
//   twist:  ||phi_n - id||_k   <= C_k n^{2k} / 2^n   (also f_n and exp(f_n) - 1)
// The constants are existential; they are measured, never assumed.

#include <string>
#include <vector>

#include "pdlab/diffeo.hpp"
#include "pdlab/verify/norms.hpp"

namespace pdlab::verify {

enum class BoundShape { bump_radius, series_term, twist_decay };

std::string to_string(BoundShape shape);
double shape_value(BoundShape shape, int k, double parameter);

struct FitEntry {
  double parameter = 0.0;
  double measured = 0.0;
  double shape = 0.0;
  double ratio = 0.0;
};

struct BoundFit {
  std::string label;
  BoundShape shape = BoundShape::bump_radius;
  int k = 0;
  int level = 0;
  std::vector<FitEntry> entries;
  double fitted_c = 0.0;  ///< max ratio
  double min_ratio = 0.0;

  /// max / min ratio - 1 across the parameter range.
  double ratio_spread() const { return min_ratio > 0 ? fitted_c / min_ratio - 1.0 : 0.0; }
  nlohmann::json to_json() const;
};

/// The same fit on the base grid and after one refinement.
struct FitPair {
  BoundFit coarse;
  BoundFit fine;
  double relative_change() const;
  bool stable(double tolerance = 0.05) const { return relative_change() <= tolerance; }
  nlohmann::json to_json() const;
};

BoundFit fit_from_reports(const std::string& label, BoundShape shape, int k,
                          const std::vector<double>& parameters, const std::vector<NormReport>& reports,
                          int level);
FitPair fit_pair(const std::string& label, BoundShape shape, int k, const std::vector<double>& parameters,
                 const std::vector<NormReport>& reports);

struct FitResult {
  std::vector<double> parameters;
  std::vector<NormReport> reports;
  std::vector<FitPair> fits;  ///< index k
};

/// Bump norms ||chi(|x| / delta)||_k on a polar grid over the closed disk.
FitResult lemma_bivector_fit(int k_max, const std::vector<double>& deltas, const Cutoff& chi = Cutoff{},
                             Resolution res = {64, 64});

/// ||pi_n||_k sampled on the disk (n, 1) through u itself, n in [n_lo, n_hi].
FitResult series_fit(const Arrangement& arrangement, int k_max, int n_lo, int n_hi,
                     Resolution res = {64, 64});

struct TwistFitResult {
  std::vector<double> levels;
  FitResult phi;   ///< phi_n - id
  FitResult f;     ///< f_n
  FitResult expf;  ///< exp(f_n) - 1
  bool c0_bound_holds = false;  ///< sampled ||phi_n - id||_0 <= 2 pi / 2^n for every n
  nlohmann::json to_json() const;
};

/// Samples the twist support shell of each n in [n_lo, n_hi].
TwistFitResult phi_deviation_fit(const RotationFamily& family, int k_max, int n_lo, int n_hi,
                                 Resolution res = {128, 256});

/// sum_{n > N} n^k 2^{nk} / n!, in 128-bit floats.
double series_tail(int k, int N);

/// sum_{i >= n} i^{2k} / 2^i, in 128-bit floats.
double twist_tail(int k, int n);

/// Least n >= 4 with c_k * twist_tail(k, n) <= eps / 2.
int tail_epsilon_index(int k, double eps, double c_k);

}  // namespace pdlab::verify
