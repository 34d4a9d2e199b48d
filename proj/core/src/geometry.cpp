#include "pdlab/geometry.hpp"

#include <cmath>

namespace pdlab {

namespace {

Rational pow2(int e) {
  mpz_class z = 1;
  z <<= e;
  return Rational(z);
}

Rational inv(long v) { return Rational(1, v); }

// 21 correct digits of pi, rounded down and up.
const Rational& pi_lower() {
  static const Rational q(mpz_class("314159265358979323846"), mpz_class("100000000000000000000"));
  return q;
}
const Rational& pi_upper() {
  static const Rational q(mpz_class("314159265358979323847"), mpz_class("100000000000000000000"));
  return q;
}

}  // namespace

void check_level(int n) {
  if (n < kMinLevel || n > kMaxLevel)
    throw UsageError("level n must lie in [4, 62], got " + std::to_string(n));
}

void check_disk(int n, std::int64_t s) {
  check_level(n);
  const std::int64_t count = std::int64_t{1} << n;
  if (s < 1 || s > count)
    throw UsageError("disk index s must lie in [1, 2^n], got " + std::to_string(s));
}

Rational disk_radius(int n) {
  check_level(n);
  Rational q = inv(n) / pow2(n);
  q.canonicalize();
  return q;
}

double disk_radius_double(int n) { return std::ldexp(1.0 / n, -n); }

bool center_is_rational(int n, std::int64_t s) {
  check_disk(n, s);
  return s % (std::int64_t{1} << (n - 2)) == 0;
}

std::pair<Rational, Rational> rational_center(int n, std::int64_t s) {
  if (!center_is_rational(n, s)) throw UsageError("disk center is irrational");
  const auto quadrant = (s >> (n - 2)) % 4;
  const Rational r = inv(n);
  switch (quadrant) {
    case 0: return {r, 0};
    case 1: return {0, r};
    case 2: return {-r, 0};
    default: return {0, -r};
  }
}

Point disk_center(int n, std::int64_t s) {
  check_disk(n, s);
  if (center_is_rational(n, s)) {
    const auto [cx, cy] = rational_center(n, s);
    return {cx.get_d(), cy.get_d()};
  }
  // Reduce the angle to [0, 2pi) exactly before leaving the integers.
  const long double angle =
      static_cast<long double>(kTwoPi) * std::ldexp(static_cast<long double>(s), -n);
  const double r = 1.0 / n;
  return {static_cast<double>(std::cos(angle)) * r, static_cast<double>(std::sin(angle)) * r};
}

DiskSpec disk_spec(int n, std::int64_t s) {
  check_disk(n, s);
  return {n, s, disk_center(n, s), disk_radius(n)};
}

AnnulusSpec annulus(int n, AnnulusKind kind) {
  check_level(n);
  const Rational centre = inv(n);
  const Rational half = kind == AnnulusKind::E ? inv(4L * n * n) : inv(2L * n * n);
  return {n, kind, centre - half, centre + half};
}

GapCertificate adjacent_gap(int n) {
  check_level(n);
  GapCertificate g;
  g.n = n;
  const Rational two_delta = 2 * disk_radius(n);
  const Rational y_lo = pi_lower() / pow2(n);
  const Rational y_hi = pi_upper() / pow2(n);
  g.lower = Rational(2, n) * (y_lo - y_lo * y_lo * y_lo / 6) - two_delta;
  g.upper = Rational(2, n) * y_hi - two_delta;
  g.lower.canonicalize();
  g.upper.canonicalize();
  g.certified_positive = sgn(g.lower) > 0;
  g.approx = 2.0 / n * std::sin(std::ldexp(3.14159265358979323846, -n)) - 2.0 * disk_radius_double(n);
  return g;
}

SeparationCertificate annuli_disjoint(int n, int m) {
  if (n == m) throw UsageError("annuli_disjoint needs distinct levels");
  const auto e = annulus(n, AnnulusKind::E);
  const auto f = annulus(m, AnnulusKind::F);
  SeparationCertificate c;
  c.n = n;
  c.m = m;
  if (e.outer < f.inner) {
    c.e_below_f = true;
    c.lower_side = e.outer;
    c.upper_side = f.inner;
    c.disjoint = true;
  } else {
    c.e_below_f = false;
    c.lower_side = f.outer;
    c.upper_side = e.inner;
    c.disjoint = f.outer < e.inner;
  }
  return c;
}

ContainmentCertificate disk_in_annulus(int n, std::int64_t s) {
  check_disk(n, s);
  const auto e = annulus(n, AnnulusKind::E);
  const Rational delta = disk_radius(n);
  ContainmentCertificate c;
  c.n = n;
  c.s = s;
  c.disk_inner = inv(n) - delta;
  c.disk_outer = inv(n) + delta;
  c.annulus_inner = e.inner;
  c.annulus_outer = e.outer;
  c.inner_tight = c.disk_inner == e.inner;
  c.outer_tight = c.disk_outer == e.outer;
  c.contained = c.disk_inner >= e.inner && c.disk_outer <= e.outer;
  return c;
}

TwistBands twist_bands(int n, TwistSchedule schedule) {
  check_level(n);
  TwistBands b;
  b.n = n;
  b.slope = schedule.slope(n);
  const Rational centre = inv(n);
  const Rational half = inv(static_cast<long>(b.slope) * n * n);
  const Rational plateau = half / 2;
  b.support_inner = centre - half;
  b.support_outer = centre + half;
  b.plateau_inner = centre - plateau;
  b.plateau_outer = centre + plateau;
  return b;
}

TwistCertificate twist_certificate(int n, int m_max, TwistSchedule schedule) {
  const auto b = twist_bands(n, schedule);
  const auto f = annulus(n, AnnulusKind::F);
  const Rational delta = disk_radius(n);
  TwistCertificate c;
  c.n = n;
  c.m_max = m_max;
  c.disks_in_plateau = inv(n) - delta >= b.plateau_inner && inv(n) + delta <= b.plateau_outer;
  c.support_in_f = b.support_inner >= f.inner && b.support_outer <= f.outer;
  c.support_avoids_other_e = true;
  for (int m = kMinLevel; m <= m_max; ++m) {
    if (m == n) continue;
    const auto e = annulus(m, AnnulusKind::E);
    // Open support against closed annulus.
    if (!(b.support_outer <= e.inner || e.outer <= b.support_inner)) {
      c.support_avoids_other_e = false;
      break;
    }
  }
  return c;
}

bool twist_supports_disjoint(int n, int m, TwistSchedule schedule) {
  if (n == m) throw UsageError("twist_supports_disjoint needs distinct levels");
  const auto a = twist_bands(n, schedule);
  const auto b = twist_bands(m, schedule);
  return a.support_outer <= b.support_inner || b.support_outer <= a.support_inner;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace pdlab
