#include "pdlab/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <mpfr.h>

namespace pdlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

class Mp {
 public:
  explicit Mp(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with outward-rounded endpoints.
struct MpInterval {
  explicit MpInterval(mpfr_prec_t prec) : lo(prec), hi(prec) {}
  Mp lo;
  Mp hi;
};

// out = a - b, endpoints rounded outward.
void sub(MpInterval& out, double a, const MpInterval& b) {
  mpfr_d_sub(out.lo.get(), a, b.hi.get(), MPFR_RNDD);
  mpfr_d_sub(out.hi.get(), a, b.lo.get(), MPFR_RNDU);
}

void square(MpInterval& out, const MpInterval& a, mpfr_prec_t prec) {
  Mp l(prec), h(prec);
  if (mpfr_sgn(a.lo.get()) >= 0) {
    mpfr_sqr(out.lo.get(), a.lo.get(), MPFR_RNDD);
    mpfr_sqr(out.hi.get(), a.hi.get(), MPFR_RNDU);
  } else if (mpfr_sgn(a.hi.get()) <= 0) {
    mpfr_sqr(out.lo.get(), a.hi.get(), MPFR_RNDD);
    mpfr_sqr(out.hi.get(), a.lo.get(), MPFR_RNDU);
  } else {
    mpfr_sqr(l.get(), a.lo.get(), MPFR_RNDU);
    mpfr_sqr(h.get(), a.hi.get(), MPFR_RNDU);
    mpfr_set_zero(out.lo.get(), 1);
    mpfr_max(out.hi.get(), l.get(), h.get(), MPFR_RNDU);
  }
}

// Enclosure of (cos theta / n, sin theta / n), theta = 2 pi s / 2^n.
void center_enclosure(MpInterval& cx, MpInterval& cy, int n, std::int64_t s, mpfr_prec_t prec) {
  MpInterval theta(prec);
  mpfr_const_pi(theta.lo.get(), MPFR_RNDD);
  mpfr_const_pi(theta.hi.get(), MPFR_RNDU);
  mpfr_mul_si(theta.lo.get(), theta.lo.get(), static_cast<long>(s), MPFR_RNDD);
  mpfr_mul_si(theta.hi.get(), theta.hi.get(), static_cast<long>(s), MPFR_RNDU);
  mpfr_div_2ui(theta.lo.get(), theta.lo.get(), static_cast<unsigned long>(n - 1), MPFR_RNDD);
  mpfr_div_2ui(theta.hi.get(), theta.hi.get(), static_cast<unsigned long>(n - 1), MPFR_RNDU);

  // cos and sin are 1-Lipschitz: widen the endpoint value by the width.
  Mp width(prec);
  mpfr_sub(width.get(), theta.hi.get(), theta.lo.get(), MPFR_RNDU);

  auto enclose = [&](MpInterval& out, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    fn(out.lo.get(), theta.lo.get(), MPFR_RNDD);
    fn(out.hi.get(), theta.lo.get(), MPFR_RNDU);
    mpfr_sub(out.lo.get(), out.lo.get(), width.get(), MPFR_RNDD);
    mpfr_add(out.hi.get(), out.hi.get(), width.get(), MPFR_RNDU);
    mpfr_div_ui(out.lo.get(), out.lo.get(), static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_div_ui(out.hi.get(), out.hi.get(), static_cast<unsigned long>(n), MPFR_RNDU);
  };
  enclose(cx, mpfr_cos);
  enclose(cy, mpfr_sin);
}

Side compare_sign(int sign) {
  return sign < 0 ? Side::inside : (sign == 0 ? Side::boundary : Side::outside);
}

Side exact_disk_side(Point x, int n, std::int64_t s) {
  const auto [cx, cy] = rational_center(n, s);
  const Rational dx = Rational(x.x) - cx;
  const Rational dy = Rational(x.y) - cy;
  const Rational delta = disk_radius(n);
  return compare_sign(cmp(dx * dx + dy * dy, delta * delta));
}

}  // namespace

Side radial_side(Point x, const Rational& bound) {
  const double r2 = x.x * x.x + x.y * x.y;
  const double b = bound.get_d();
  const double b2 = b * b;
  const double err = 8.0 * kEps * (r2 + b2);
  if (r2 - b2 > err) return Side::outside;
  if (b2 - r2 > err) return Side::inside;
  const Rational qx(x.x), qy(x.y);
  return compare_sign(cmp(qx * qx + qy * qy, bound * bound));
}

Side disk_side(Point x, int n, std::int64_t s, int max_precision_bits) {
  check_disk(n, s);
  if (center_is_rational(n, s)) return exact_disk_side(x, n, s);

  // Filter: the double center carries at most ~2 ulp(1/n) error per coordinate.
  const Point c = disk_center(n, s);
  const double ec = 4.0 * kEps / n;
  const double dx = x.x - c.x, dy = x.y - c.y;
  const double d2 = dx * dx + dy * dy;
  const double delta = disk_radius_double(n);
  const double delta2 = delta * delta;
  const double err =
      4.0 * ((std::abs(dx) + std::abs(dy)) * (ec + kEps * (std::abs(dx) + std::abs(dy))) +
             2.0 * ec * ec + 4.0 * kEps * (d2 + delta2));
  if (d2 - delta2 > err) return Side::outside;
  if (delta2 - d2 > err) return Side::inside;

  for (mpfr_prec_t prec = 128; prec <= max_precision_bits; prec *= 2) {
    MpInterval cx(prec), cy(prec), ox(prec), oy(prec), sx(prec), sy(prec), r2(prec), d2i(prec);
    center_enclosure(cx, cy, n, s, prec);
    sub(ox, x.x, cx);
    sub(oy, x.y, cy);
    square(sx, ox, prec);
    square(sy, oy, prec);
    mpfr_add(r2.lo.get(), sx.lo.get(), sy.lo.get(), MPFR_RNDD);
    mpfr_add(r2.hi.get(), sx.hi.get(), sy.hi.get(), MPFR_RNDU);
    // delta^2 = 1 / (n^2 4^n)
    mpfr_set_ui(d2i.lo.get(), 1, MPFR_RNDN);
    mpfr_set_ui(d2i.hi.get(), 1, MPFR_RNDN);
    mpfr_div_ui(d2i.lo.get(), d2i.lo.get(), static_cast<unsigned long>(n) * n, MPFR_RNDD);
    mpfr_div_ui(d2i.hi.get(), d2i.hi.get(), static_cast<unsigned long>(n) * n, MPFR_RNDU);
    mpfr_div_2ui(d2i.lo.get(), d2i.lo.get(), 2UL * n, MPFR_RNDD);
    mpfr_div_2ui(d2i.hi.get(), d2i.hi.get(), 2UL * n, MPFR_RNDU);
    if (mpfr_less_p(r2.hi.get(), d2i.lo.get())) return Side::inside;
    if (mpfr_greater_p(r2.lo.get(), d2i.hi.get())) return Side::outside;
  }
  return Side::indeterminate;
}

std::int64_t nearest_sector(Point x, int n) {
  check_level(n);
  const std::int64_t count = std::int64_t{1} << n;
  std::int64_t s = 0;
  if (n <= 40) {
    double theta = std::atan2(x.y, x.x);
    if (theta < 0) theta += kTwoPi;
    s = std::llround(std::ldexp(theta / kTwoPi, n));
  } else {
    const mpfr_prec_t prec = n + 64;
    Mp theta(prec), px(prec), py(prec), pi(prec);
    mpfr_set_d(px.get(), x.x, MPFR_RNDN);
    mpfr_set_d(py.get(), x.y, MPFR_RNDN);
    mpfr_atan2(theta.get(), py.get(), px.get(), MPFR_RNDN);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_div(theta.get(), theta.get(), pi.get(), MPFR_RNDN);
    mpfr_mul_2ui(theta.get(), theta.get(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
    s = mpfr_get_sj(theta.get(), MPFR_RNDN);
  }
  s %= count;
  if (s <= 0) s += count;
  return s;
}

Point disk_offset(Point x, int n, std::int64_t s) {
  check_disk(n, s);
  if (center_is_rational(n, s)) {
    const auto [cx, cy] = rational_center(n, s);
    return {Rational(Rational(x.x) - cx).get_d(), Rational(Rational(x.y) - cy).get_d()};
  }
  if (n <= 20) return x - disk_center(n, s);
  const mpfr_prec_t prec = 2 * n + 64;
  Mp theta(prec), c(prec), sn(prec), ox(prec), oy(prec);
  mpfr_const_pi(theta.get(), MPFR_RNDN);
  mpfr_mul_si(theta.get(), theta.get(), static_cast<long>(s), MPFR_RNDN);
  mpfr_div_2ui(theta.get(), theta.get(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
  mpfr_sin_cos(sn.get(), c.get(), theta.get(), MPFR_RNDN);
  mpfr_div_ui(c.get(), c.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_div_ui(sn.get(), sn.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_d_sub(ox.get(), x.x, c.get(), MPFR_RNDN);
  mpfr_d_sub(oy.get(), x.y, sn.get(), MPFR_RNDN);
  return {mpfr_get_d(ox.get(), MPFR_RNDN), mpfr_get_d(oy.get(), MPFR_RNDN)};
}

}  // namespace pdlab
