#include "pdlab/fibered.hpp"

#include <cmath>
#include <sstream>

namespace pdlab {

ProductDiffeo product_with_identity(BaseMap psi) { return ProductDiffeo{std::move(psi)}; }

FiberedStructure::FiberedStructure(const Arrangement& arrangement, const RotationFamily& family,
                                   double leaf_volume)
    : arrangement_(&arrangement), family_(&family), leaf_volume_(leaf_volume) {
  if (!(leaf_volume > 0)) throw UsageError("leaf volume must be positive");
}

double FiberedStructure::f_excess(Point x) const { return arrangement_->u_eval(x); }

double FiberedStructure::f_eval(Point x) const { return 1.0 + f_excess(x); }

bool FiberedStructure::above_one(Point x) const {
  const auto loc = arrangement_->locate(x);
  if (const auto* in = std::get_if<location::InDisk>(&loc))
    return !in->on_boundary && in->scaled_distance < 1.0;
  return false;
}

double FiberedStructure::leaf_area(Point p) const { return f_eval(p) * leaf_volume_; }

Point FiberedStructure::apply(const BaseMap& psi, Point x) const {
  return std::visit(
      [&](const auto& m) -> Point {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, base_map::Identity>) {
          return x;
        } else if constexpr (std::is_same_v<M, base_map::Twist>) {
          return family_->phi_eval(m.n, x);
        } else if constexpr (std::is_same_v<M, base_map::Word>) {
          return family_->word_eval(m.word, x);
        } else {
          const double c = std::cos(m.angle), s = std::sin(m.angle);
          return {c * x.x - s * x.y, s * x.x + c * x.y};
        }
      },
      psi);
}

double FiberedStructure::f_invariance_residual(int n, const std::vector<Point>& samples) const {
  double worst = 0.0;
  for (const auto& x : samples)
    worst = std::max(worst, std::abs(f_excess(family_->phi_eval(n, x)) - f_excess(x)));
  return worst;
}

BaseMap FiberedStructure::r_project(const ProductDiffeo& phi, const std::vector<Point>& samples,
                                    double tolerance) const {
  for (const auto& p : samples) {
    const Point q = apply(phi.base, p);
    // f(p) = f(q) compared through the excess to keep full precision.
    const double mismatch = std::abs(f_excess(q) - f_excess(p)) * leaf_volume_;
    if (mismatch > tolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "leaf area not preserved at (" << p.x << ", " << p.y << "): mismatch " << mismatch;
      throw InvariantViolation(msg.str());
    }
  }
  return phi.base;
}

ComponentWitness component_permutation_witness(const FiberedStructure& fibered,
                                               const Arrangement& arrangement,
                                               const BaseMap& psi, int n, std::int64_t s) {
  check_disk(n, s);
  ComponentWitness w;
  w.n = n;
  w.from_s = s;
  w.from_center = disk_center(n, s);
  w.image = fibered.apply(psi, w.from_center);
  const auto loc = arrangement.locate(w.image);
  const auto* in = std::get_if<location::InDisk>(&loc);
  if (in == nullptr || in->on_boundary) return w;
  w.to_s = in->s;
  w.moved = in->n != n || in->s != s;
  if (!w.moved) return w;

  // Interior points of the source disk must land in the target disk.
  const double delta = disk_radius_double(n);
  w.interior_mapped_onto = true;
  constexpr int kRings = 4, kSpokes = 16;
  for (int i = 1; i <= kRings; ++i) {
    const double rho = 0.95 * delta * i / kRings;
    for (int j = 0; j < kSpokes; ++j) {
      const double a = kTwoPi * j / kSpokes;
      const Point x = w.from_center + Point{rho * std::cos(a), rho * std::sin(a)};
      const auto l = arrangement.locate(fibered.apply(psi, x));
      const auto* d = std::get_if<location::InDisk>(&l);
      ++w.interior_samples;
      if (d == nullptr || d->n != in->n || d->s != in->s) w.interior_mapped_onto = false;
    }
  }
  return w;
}

}  // namespace pdlab
