#pragma once

// Truncated bivariate Taylor expansions ("jets").
//
// Coefficients are stored in the factorial-normalized convention
//   c[a] = (1 / a1! a2!) d^{a1}_{x1} d^{a2}_{x2} f(base),
// so multiplication is a plain Cauchy convolution and composition with a
// univariate function is a polynomial substitution.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pdlab/types.hpp"

namespace pdlab {

inline constexpr int kDefaultMaxJetOrder = 8;

struct MultiIndex {
  int a1 = 0;
  int a2 = 0;

  constexpr int order() const { return a1 + a2; }
  friend constexpr auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Every multi-index with |a| <= max_order, degree-major, a2 ascending.
std::vector<MultiIndex> multi_indices(int max_order);

inline constexpr std::size_t jet_size(int order) {
  return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
}

inline constexpr std::size_t jet_index(MultiIndex a) {
  const int d = a.order();
  return static_cast<std::size_t>(d * (d + 1) / 2 + a.a2);
}

template <typename T>
class Jet {
 public:
  Jet() = default;
  Jet(Point base, int order) : base_(base), order_(order), c_(jet_size(order), T{}) {
    if (order < 0) throw UsageError("jet order must be non-negative");
  }

  static Jet constant(Point base, int order, T value) {
    Jet j(base, order);
    j.c_[0] = value;
    return j;
  }

  /// Jet of the coordinate function x_{axis+1} (axis 0 or 1).
  static Jet coordinate(Point base, int order, int axis) {
    Jet j(base, order);
    j.c_[0] = T(axis == 0 ? base.x : base.y);
    if (order >= 1) j[axis == 0 ? MultiIndex{1, 0} : MultiIndex{0, 1}] = T(1);
    return j;
  }

  Point base() const { return base_; }
  int order() const { return order_; }
  T value() const { return c_[0]; }

  T operator[](MultiIndex a) const { return a.order() > order_ ? T{} : c_[jet_index(a)]; }
  T& operator[](MultiIndex a) {
    if (a.order() > order_) throw UsageError("multi-index exceeds jet order");
    return c_[jet_index(a)];
  }

  std::span<const T> coeffs() const { return c_; }

  /// Same jet re-anchored at another point (used for translation).
  Jet rebased(Point base) const {
    Jet j = *this;
    j.base_ = base;
    return j;
  }

  Jet truncated(int order) const {
    Jet j(base_, std::min(order, order_));
    std::copy_n(c_.begin(), j.c_.size(), j.c_.begin());
    return j;
  }

  /// Jet minus its constant term.
  Jet increment() const {
    Jet j = *this;
    j.c_[0] = T{};
    return j;
  }

  Jet& operator+=(const Jet& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(T s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Jet& add_constant(T s) {
    c_[0] += s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(T s, Jet a) { return a *= s; }
  friend Jet operator*(Jet a, T s) { return a *= s; }

  /// Truncated Cauchy product.
  friend Jet operator*(const Jet& f, const Jet& g) {
    f.check_compatible(g);
    Jet out(f.base_, f.order_);
    const int K = f.order_;
    for (int d = 0; d <= K; ++d) {
      for (int a2 = 0; a2 <= d; ++a2) {
        const MultiIndex a{d - a2, a2};
        T acc{};
        for (int b1 = 0; b1 <= a.a1; ++b1) {
          for (int b2 = 0; b2 <= a.a2; ++b2) {
            acc += f.c_[jet_index({b1, b2})] * g.c_[jet_index({a.a1 - b1, a.a2 - b2})];
          }
        }
        out.c_[jet_index(a)] = acc;
      }
    }
    return out;
  }

  void check_compatible(const Jet& o) const {
    if (order_ != o.order_) throw UsageError("jet order mismatch");
    if (!(base_ == o.base_)) throw UsageError("jet base point mismatch");
  }

 private:
  Point base_{};
  int order_ = 0;
  std::vector<T> c_;
};

using RealJet = Jet<double>;
using ComplexJet = Jet<std::complex<double>>;

RealJet real_part(const ComplexJet& j);
RealJet imag_part(const ComplexJet& j);
ComplexJet to_complex(const RealJet& j);

/// Jet of z = x1 + i x2.
ComplexJet complex_coordinate(Point base, int order);

/// Univariate normalized Taylor coefficients c_i = g^{(i)}(t0) / i!.
template <typename T>
struct UniJet {
  double center = 0.0;
  std::vector<T> c;

  int order() const { return static_cast<int>(c.size()) - 1; }
};

/// Coefficients of exp at z0 (real or complex).
template <typename T>
UniJet<T> exp_unijet(T z0, int order) {
  UniJet<T> u;
  u.c.resize(order + 1);
  T term = std::exp(z0);
  for (int i = 0; i <= order; ++i) {
    u.c[i] = term;
    term /= static_cast<double>(i + 1);
  }
  return u;
}

/// Coefficients of sqrt at q0 > 0: binom(1/2, i) q0^{1/2 - i}.
UniJet<double> sqrt_unijet(double q0, int order);

/// g o h, where outer holds the coefficients of g at h(base).
/// Substitution by Horner in the increment of h.
template <typename T, typename U>
Jet<U> jet_compose_1d(const UniJet<T>& outer, const Jet<U>& inner) {
  if (outer.order() < inner.order()) throw UsageError("outer jet order below inner jet order");
  const Jet<U> dh = inner.increment();
  const int K = inner.order();
  Jet<U> acc = Jet<U>::constant(inner.base(), K, U(outer.c[K]));
  for (int i = K - 1; i >= 0; --i) {
    acc = acc * dh;
    acc.add_constant(U(outer.c[i]));
  }
  return acc;
}

/// Jet of x -> |x| at x != 0.
RealJet jet_norm(Point x, int order);

/// Composition of plane maps written as complex jets: outer is the jet of G
/// at inner.value(), inner the jet of H at x. Returns the jet of G o H at x.
ComplexJet compose_plane(const ComplexJet& outer, const ComplexJet& inner);

/// Jacobian determinant of a plane map given as a complex jet (order >= 1).
double jacobian_det(const ComplexJet& map);

namespace detail {
inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace detail

/// Central-difference estimate of the normalized derivative D^a f(x).
///
/// Tensor product of the n-th central differences (O(h^2) per axis) with one
/// Richardson step h -> h/2, giving O(h^4). `Real` is the working precision of
/// the stencil; f must be callable as f(Real x1, Real x2) -> Real.
template <typename Real = double, typename F>
double fd_derivative(F&& f, Point x, MultiIndex a, double h = 1e-3) {
  auto stencil = [&](Real step) {
    Real acc = 0;
    for (int j = 0; j <= a.a1; ++j) {
      const Real w1 = ((j % 2) ? -1 : 1) * detail::binomial(a.a1, j);
      const Real x1 = Real(x.x) + (Real(a.a1) / 2 - j) * step;
      for (int l = 0; l <= a.a2; ++l) {
        const Real w2 = ((l % 2) ? -1 : 1) * detail::binomial(a.a2, l);
        const Real x2 = Real(x.y) + (Real(a.a2) / 2 - l) * step;
        acc += w1 * w2 * Real(f(x1, x2));
      }
    }
    Real scale = 1;
    for (int i = 0; i < a.order(); ++i) scale *= step;
    return acc / scale;
  };
  if (a.order() == 0) return static_cast<double>(Real(f(Real(x.x), Real(x.y))));
  const Real coarse = stencil(Real(h));
  const Real fine = stencil(Real(h) / 2);
  const Real extrapolated = (4 * fine - coarse) / 3;
  return static_cast<double>(extrapolated /
                             Real(detail::factorial(a.a1) * detail::factorial(a.a2)));
}

}  // namespace pdlab
