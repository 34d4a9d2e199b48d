#pragma once

// The bivector coefficient u of pi = u dx1 ^ dx2:
//
//   u = sum_{n >= 4} (1/n!) sum_{s=1}^{2^n} chi(|x - p(n,s)| / delta_n).
//
// The closed disks are pairwise disjoint and each sits inside its annulus E_n,
// and the E_n are pairwise disjoint, so at most one term is nonzero at any x.
// Evaluation locates that term exactly; there is no truncation of the series.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pdlab/bump.hpp"
#include "pdlab/geometry.hpp"
#include "pdlab/predicates.hpp"

namespace pdlab {

struct LocateOptions {
  int n_cap = 60;                   ///< deepest level resolved; must be <= 62
  int max_precision_bits = 1024;    ///< cap for the interval predicates
};

namespace location {

struct Outside {
  friend bool operator==(const Outside&, const Outside&) = default;
};

struct InDisk {
  int n = 0;
  std::int64_t s = 0;
  bool on_boundary = false;
  double scaled_distance = 0.0;  ///< |x - p(n,s)| / delta_n, rounded

  friend bool operator==(const InDisk& a, const InDisk& b) {
    return a.n == b.n && a.s == b.s && a.on_boundary == b.on_boundary;
  }
};

/// Within the origin radius, where only levels beyond n_cap live.
struct OriginRegion {
  friend bool operator==(const OriginRegion&, const OriginRegion&) = default;
};

/// A distance predicate exhausted its precision budget.
struct Indeterminate {
  int n = 0;
  std::int64_t s = 0;
  friend bool operator==(const Indeterminate&, const Indeterminate&) = default;
};

}  // namespace location

using SupportLocation =
    std::variant<location::Outside, location::InDisk, location::OriginRegion, location::Indeterminate>;

std::string describe(const SupportLocation& loc);

class Arrangement {
 public:
  explicit Arrangement(Cutoff chi = Cutoff{}, LocateOptions options = {});

  const Cutoff& cutoff() const { return chi_; }
  const LocateOptions& options() const { return options_; }

  /// Radius below which points are reported as OriginRegion.
  const Rational& origin_radius() const { return origin_radius_; }

  SupportLocation locate(Point x) const;

  /// Level n with x in the closed annulus E_n, or 0 when there is none.
  int annulus_level(Point x) const;

  /// u(x); throws IndeterminateError when the location cannot be decided.
  double u_eval(Point x) const;
  RealJet u_jet(Point x, int order) const;

  /// x lies in the closed support K (disks plus the accumulation point 0).
  bool in_support_closure(Point x) const;

  /// sup |u| = max_n 1/n! = 1/24.
  static Rational sup_u_exact();

 private:
  Cutoff chi_;
  LocateOptions options_;
  Rational origin_radius_;
  Rational outer_radius_;
  std::vector<AnnulusSpec> e_annuli_;  // index n - 4
};

double factorial(int n);

}  // namespace pdlab
