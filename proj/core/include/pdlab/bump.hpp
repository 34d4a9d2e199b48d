#pragma once

// The cutoff chi and the profiles built from it: radial bumps around a disk
// center and the angular twist profile f_n.
//
// chi(t) = 1 on |t| <= 1/2, 0 on |t| >= 1, strictly between in the transition.
// Realization: with s = |t| and h(s) = 1/(2-2s) - 1/(2s-1),
//   chi = 1 / (1 + exp(h)),
// which equals g(2-2s) / (g(2-2s) + g(2s-1)) for g(y) = exp(-1/y), y > 0.

#include <complex>
#include <vector>

#include "pdlab/jets.hpp"

namespace pdlab {

enum class CutoffShape {
  smooth,      ///< plateau on [-1/2, 1/2]
  no_plateau,  ///< negative-control fixture: flat only at t = 0
};

namespace detail {

template <typename T>
T logistic_of_negated(T h) {
  using std::exp;
  using boost::multiprecision::exp;
  if (h <= 0) return T(1) / (T(1) + exp(h));
  const T w = exp(-h);
  return w / (T(1) + w);
}

template <typename T>
std::vector<T> exp_series(const std::vector<T>& y) {
  using std::exp;
  using boost::multiprecision::exp;
  std::vector<T> e(y.size());
  e[0] = exp(y[0]);
  for (std::size_t k = 1; k < y.size(); ++k) {
    T acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += T(static_cast<int>(j)) * y[j] * e[k - j];
    e[k] = acc / T(static_cast<int>(k));
  }
  return e;
}

template <typename T>
std::vector<T> reciprocal_series(const std::vector<T>& q) {
  std::vector<T> r(q.size());
  r[0] = T(1) / q[0];
  for (std::size_t k = 1; k < q.size(); ++k) {
    T acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += q[j] * r[k - j];
    r[k] = -r[0] * acc;
  }
  return r;
}

template <typename T>
std::vector<T> product_series(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> p(a.size(), T(0));
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) p[k] += a[j] * b[k - j];
  return p;
}

}  // namespace detail

/// chi(t) in working precision T. Plateau and exterior values are exact.
template <typename T>
T chi_value(T t, CutoffShape shape = CutoffShape::smooth) {
  const T s = t < 0 ? T(-t) : t;
  if (s >= 1) return T(0);
  if (shape == CutoffShape::smooth) {
    if (s <= T(0.5)) return T(1);
    return detail::logistic_of_negated(T(1) / (2 - 2 * s) - T(1) / (2 * s - 1));
  }
  if (s <= 0) return T(1);
  return detail::logistic_of_negated(T(1) / (1 - s) - T(1) / s);
}

/// Normalized Taylor coefficients chi^{(i)}(t)/i!, i <= order, in precision T.
template <typename T>
std::vector<T> chi_series(T t, int order, CutoffShape shape = CutoffShape::smooth) {
  std::vector<T> c(order + 1, T(0));
  const bool negative = t < 0;
  const T s = negative ? T(-t) : t;
  if (s >= 1) return c;
  const bool plateau = shape == CutoffShape::smooth ? s <= T(0.5) : s <= 0;
  if (plateau) {
    c[0] = 1;
    return c;
  }

  // h(s + e) = 1/(a1 - m1 e) - 1/(a2 + m2 e), expanded termwise.
  T a1, m1, a2, m2;
  if (shape == CutoffShape::smooth) {
    a1 = 2 - 2 * s, m1 = 2, a2 = 2 * s - 1, m2 = 2;
  } else {
    a1 = 1 - s, m1 = 1, a2 = s, m2 = 1;
  }
  std::vector<T> h(order + 1);
  T p1 = T(1) / a1, p2 = T(1) / a2;
  for (int k = 0; k <= order; ++k) {
    h[k] = p1 - ((k % 2) ? -p2 : p2);
    p1 *= m1 / a1;
    p2 *= m2 / a2;
  }

  if (h[0] <= 0) {
    auto q = detail::exp_series(h);
    q[0] += 1;
    c = detail::reciprocal_series(q);
  } else {
    std::vector<T> neg(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) neg[k] = -h[k];
    auto w = detail::exp_series(neg);
    auto q = w;
    q[0] += 1;
    c = detail::product_series(w, detail::reciprocal_series(q));
  }
  if (negative)
    for (int k = 1; k <= order; k += 2) c[k] = -c[k];
  return c;
}

/// The cutoff chi, evaluated in double with jets computed in 128-bit floats.
class Cutoff {
 public:
  explicit Cutoff(CutoffShape shape = CutoffShape::smooth) : shape_(shape) {}

  CutoffShape shape() const { return shape_; }
  double operator()(double t) const { return chi_value(t, shape_); }
  UniJet<double> jet(double t, int order) const;

  /// Value threshold at or below which chi is identically 1 near t.
  double plateau_half_width() const { return shape_ == CutoffShape::smooth ? 0.5 : 0.0; }

 private:
  CutoffShape shape_;
};

double chi_eval(double t);
UniJet<double> chi_jet(double t, int order);

/// Jet at x of chi(|x - p| / delta).
RealJet radial_bump_jet(Point x, Point p, double delta, int order, const Cutoff& chi = Cutoff{});

/// Same, from the displacement d = x - p; the jet is anchored at `anchor`.
RealJet radial_bump_jet_at_offset(Point anchor, Point offset, double delta, int order,
                                  const Cutoff& chi = Cutoff{});

/// Radial slope factor kappa_n of the twist profile chi(kappa_n n (n|x| - 1)).
///
/// `adapted` uses kappa = 2, 3 for n = 4, 5 and kappa = 4 from n = 6 on, so that
/// every disk of level n sits in the twist plateau and the twist supports are
/// pairwise disjoint. `literal` uses kappa = 4 for every n; its plateau misses
/// part of the disks for n = 4, 5.
class TwistSchedule {
 public:
  enum class Kind { adapted, literal };

  constexpr TwistSchedule() = default;
  constexpr explicit TwistSchedule(Kind kind) : kind_(kind) {}

  constexpr Kind kind() const { return kind_; }
  constexpr int slope(int n) const {
    if (kind_ == Kind::literal) return 4;
    return n <= 4 ? 2 : (n == 5 ? 3 : 4);
  }

 private:
  Kind kind_ = Kind::adapted;
};

/// Argument kappa_n n (n r - 1) of chi in the twist profile.
double twist_argument(int n, double r, TwistSchedule schedule = {});

/// f_n(x) = (2 pi / 2^n) i chi(kappa_n n (n|x| - 1)).
std::complex<double> f_n_eval(Point x, int n, TwistSchedule schedule = {}, const Cutoff& chi = Cutoff{});
ComplexJet f_n_jet(Point x, int n, int order, TwistSchedule schedule = {}, const Cutoff& chi = Cutoff{});

}  // namespace pdlab
