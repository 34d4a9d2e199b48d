#pragma once

// Regular Poisson structure on a product Sigma x Lambda whose leaves are
// ({p} x Lambda, f(p) nu), with f = u + 1. Lambda enters only through its total
// volume V; product maps psi x id are represented by their base part.

#include <variant>
#include <vector>

#include "pdlab/diffeo.hpp"

namespace pdlab {

namespace base_map {
struct Identity {};
struct Twist {
  int n = 0;
};
struct Word {
  BitWord word;
};
/// Rigid rotation about 0; generally does not preserve f (negative control).
struct Rotation {
  double angle = 0.0;
};
}  // namespace base_map

using BaseMap = std::variant<base_map::Identity, base_map::Twist, base_map::Word, base_map::Rotation>;

/// psi x id on Sigma x Lambda.
struct ProductDiffeo {
  BaseMap base;
};

ProductDiffeo product_with_identity(BaseMap psi);

class FiberedStructure {
 public:
  FiberedStructure(const Arrangement& arrangement, const RotationFamily& family,
                   double leaf_volume = 1.0);

  double leaf_volume() const { return leaf_volume_; }

  double f_eval(Point x) const;
  /// f - 1 = u, without the rounding of 1 + u.
  double f_excess(Point x) const;
  /// x lies in the open set {f > 1}.
  bool above_one(Point x) const;

  double leaf_area(Point p) const;

  Point apply(const BaseMap& psi, Point x) const;

  /// max over samples of |f(phi_n(x)) - f(x)|.
  double f_invariance_residual(int n, const std::vector<Point>& samples) const;

  /// Base part of psi x id, after checking leaf areas are preserved at the
  /// samples to within `tolerance`. Throws InvariantViolation otherwise.
  BaseMap r_project(const ProductDiffeo& phi, const std::vector<Point>& samples,
                    double tolerance = 1e-9) const;

 private:
  const Arrangement* arrangement_;
  const RotationFamily* family_;
  double leaf_volume_;
};

/// Evidence that phi_n (or a word) permutes components of {f > 1}.
struct ComponentWitness {
  int n = 0;
  std::int64_t from_s = 0;
  std::int64_t to_s = 0;
  Point from_center;
  Point image;
  bool moved = false;  ///< image lies in a different component
  int interior_samples = 0;
  bool interior_mapped_onto = false;  ///< sampled interior points land in the target disk
};

ComponentWitness component_permutation_witness(const FiberedStructure& fibered,
                                               const Arrangement& arrangement,
                                               const BaseMap& psi, int n, std::int64_t s = 1);

}  // namespace pdlab
