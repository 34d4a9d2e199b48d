#include "pdlab/arrangement.hpp"

#include <algorithm>
#include <cmath>

namespace pdlab {

double factorial(int n) { return detail::factorial(n); }

std::string describe(const SupportLocation& loc) {
  return std::visit(
      [](const auto& l) -> std::string {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, location::Outside>) {
          return "outside";
        } else if constexpr (std::is_same_v<L, location::InDisk>) {
          return "in-disk(" + std::to_string(l.n) + "," + std::to_string(l.s) +
                 (l.on_boundary ? ",boundary)" : ")");
        } else if constexpr (std::is_same_v<L, location::OriginRegion>) {
          return "origin-region";
        } else {
          return "indeterminate(" + std::to_string(l.n) + "," + std::to_string(l.s) + ")";
        }
      },
      loc);
}

Arrangement::Arrangement(Cutoff chi, LocateOptions options) : chi_(chi), options_(options) {
  if (options_.n_cap < kMinLevel || options_.n_cap > kMaxLevel)
    throw UsageError("n_cap must lie in [4, 62]");
  if (options_.max_precision_bits < 128) throw UsageError("precision cap must be >= 128 bits");
  origin_radius_ = annulus(options_.n_cap, AnnulusKind::F).inner;
  outer_radius_ = annulus(kMinLevel, AnnulusKind::E).outer;
  for (int n = kMinLevel; n <= options_.n_cap; ++n) e_annuli_.push_back(annulus(n, AnnulusKind::E));
}

int Arrangement::annulus_level(Point x) const {
  const double r = norm(x);
  if (r == 0.0) return 0;
  const double inv = 1.0 / r;
  const int lo = std::max(kMinLevel, static_cast<int>(std::floor(inv)) - 1);
  const int hi = std::min(options_.n_cap, static_cast<int>(std::ceil(inv)) + 1);
  for (int n = lo; n <= hi; ++n) {
    const auto& e = e_annuli_[n - kMinLevel];
    if (radial_side(x, e.inner) != Side::inside && radial_side(x, e.outer) != Side::outside) return n;
  }
  return 0;
}

SupportLocation Arrangement::locate(Point x) const {
  if (x.x == 0.0 && x.y == 0.0) return location::OriginRegion{};
  if (radial_side(x, outer_radius_) == Side::outside) return location::Outside{};
  if (radial_side(x, origin_radius_) == Side::inside) return location::OriginRegion{};

  const int n = annulus_level(x);
  if (n == 0) return location::Outside{};

  const std::int64_t count = std::int64_t{1} << n;
  const std::int64_t s0 = nearest_sector(x, n);
  for (const std::int64_t ds : {0, -1, 1}) {
    std::int64_t s = s0 + ds;
    if (s < 1) s += count;
    if (s > count) s -= count;
    const Side side = disk_side(x, n, s, options_.max_precision_bits);
    if (side == Side::indeterminate) return location::Indeterminate{n, s};
    if (side == Side::outside) continue;
    const Point d = disk_offset(x, n, s);
    return location::InDisk{n, s, side == Side::boundary, norm(d) / disk_radius_double(n)};
  }
  return location::Outside{};
}

double Arrangement::u_eval(Point x) const {
  const auto loc = locate(x);
  if (const auto* in = std::get_if<location::InDisk>(&loc)) {
    if (in->on_boundary) return 0.0;
    return chi_(in->scaled_distance) / factorial(in->n);
  }
  if (const auto* bad = std::get_if<location::Indeterminate>(&loc))
    throw IndeterminateError("disk predicate undecided at level " + std::to_string(bad->n) +
                             ", index " + std::to_string(bad->s));
  return 0.0;
}

RealJet Arrangement::u_jet(Point x, int order) const {
  const auto loc = locate(x);
  if (const auto* in = std::get_if<location::InDisk>(&loc)) {
    if (in->on_boundary) return RealJet(x, order);
    RealJet j = radial_bump_jet_at_offset(x, disk_offset(x, in->n, in->s),
                                          disk_radius_double(in->n), order, chi_);
    j *= 1.0 / factorial(in->n);
    return j;
  }
  if (const auto* bad = std::get_if<location::Indeterminate>(&loc))
    throw IndeterminateError("disk predicate undecided at level " + std::to_string(bad->n) +
                             ", index " + std::to_string(bad->s));
  return RealJet(x, order);
}

bool Arrangement::in_support_closure(Point x) const {
  const auto loc = locate(x);
  if (std::holds_alternative<location::InDisk>(loc)) return true;
  if (std::holds_alternative<location::Indeterminate>(loc))
    throw IndeterminateError("support membership undecided");
  // Only the origin itself is a limit point outside the disks.
  return x.x == 0.0 && x.y == 0.0;
}

Rational Arrangement::sup_u_exact() { return Rational(1, 24); }

}  // namespace pdlab
