#pragma once

// Independent oracles and seeded generators shared by the tests. Nothing here
// calls the library code it is used to check.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include "pdlab/types.hpp"

namespace oracle {

using f128 = boost::multiprecision::float128;
using boost::multiprecision::exp;

inline const f128 kPi = boost::math::constants::pi<f128>();

/// g(2 - 2s) / (g(2 - 2s) + g(2s - 1)) with g(y) = exp(-1/y).
template <typename T>
T chi(T t) {
  using std::abs;
  using std::exp;
  using boost::multiprecision::abs;
  using boost::multiprecision::exp;
  const T s = abs(t);
  if (s >= 1) return T(0);
  if (s <= T(0.5)) return T(1);
  const T a = exp(T(-1) / (2 - 2 * s));
  const T b = exp(T(-1) / (2 * s - 1));
  return a / (a + b);
}

/// Same cutoff on the whole transition 0 < s < 1 with g(1 - s), g(s).
template <typename T>
T chi_no_plateau(T t) {
  using std::abs;
  using std::exp;
  using boost::multiprecision::abs;
  using boost::multiprecision::exp;
  const T s = abs(t);
  if (s >= 1) return T(0);
  if (s <= 0) return T(1);
  const T a = exp(T(-1) / (1 - s));
  const T b = exp(T(-1) / s);
  return a / (a + b);
}

inline f128 hypot(f128 x, f128 y) { return boost::multiprecision::sqrt(x * x + y * y); }

inline int slope(int n) { return n <= 4 ? 2 : (n == 5 ? 3 : 4); }

/// Twist angle (2 pi / 2^n) chi(kappa n (n r - 1)).
inline f128 twist_angle(int n, f128 r) {
  return 2 * kPi / boost::multiprecision::ldexp(f128(1), n) * chi(f128(slope(n) * n) * (n * r - 1));
}

/// Center of disk (n, s) in 128-bit floats.
inline std::pair<f128, f128> center(int n, std::int64_t s) {
  const f128 a = 2 * kPi * f128(s) / boost::multiprecision::ldexp(f128(1), n);
  return {boost::multiprecision::cos(a) / n, boost::multiprecision::sin(a) / n};
}

inline f128 delta(int n) { return f128(1) / (f128(n) * boost::multiprecision::ldexp(f128(1), n)); }

inline double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// u by brute force over every disk of levels 4..n_max (long double distances).
inline double u_brute(pdlab::Point x, int n_max) {
  for (int n = 4; n <= n_max; ++n) {
    const std::int64_t count = std::int64_t{1} << n;
    for (std::int64_t s = 1; s <= count; ++s) {
      const auto [cx, cy] = center(n, s);
      const f128 d = hypot(f128(x.x) - cx, f128(x.y) - cy) / delta(n);
      if (d < 1) return static_cast<double>(chi(d)) / factorial(n);
    }
  }
  return 0.0;
}

}  // namespace oracle

namespace gen {

/// Fixed-seed engine; each test picks its own salt.
inline std::mt19937_64 engine(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline pdlab::Point polar(std::mt19937_64& rng, double r_lo, double r_hi) {
  const double r = uniform(rng, r_lo, r_hi);
  const double a = uniform(rng, 0.0, 2 * M_PI);
  return {r * std::cos(a), r * std::sin(a)};
}

inline pdlab::Point around(std::mt19937_64& rng, pdlab::Point c, double r_lo, double r_hi) {
  const auto p = polar(rng, r_lo, r_hi);
  return {c.x + p.x, c.y + p.y};
}

}  // namespace gen
