#include <doctest.h>

#include <gmpxx.h>

#include <set>

#include "pdlab/jets.hpp"
#include "support.hpp"

using namespace pdlab;

TEST_CASE("multi-index enumeration is complete and duplicate-free") {
  for (int K = 0; K <= 8; ++K) {
    const auto idx = multi_indices(K);
    CHECK(idx.size() == jet_size(K));
    CHECK(idx.size() == static_cast<std::size_t>((K + 1) * (K + 2) / 2));
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      CHECK(idx[i].order() <= K);
      CHECK(jet_index(idx[i]) == i);
      seen.insert({idx[i].a1, idx[i].a2});
    }
    CHECK(seen.size() == idx.size());
  }
}

TEST_CASE("product of (1 + x1) and (1 + x2)") {
  const Point o{0, 0};
  auto a = RealJet::coordinate(o, 2, 0);
  a.add_constant(1);
  auto b = RealJet::coordinate(o, 2, 1);
  b.add_constant(1);
  const auto p = a * b;
  CHECK(p[{1, 1}] == 1.0);
  CHECK(p[{0, 0}] == 1.0);
  CHECK(p[{2, 0}] == 0.0);
}

TEST_CASE("constant one is a unit") {
  auto rng = gen::engine(1);
  RealJet j({0.3, -0.2}, 4);
  for (std::size_t i = 0; i < jet_size(4); ++i) j[multi_indices(4)[i]] = gen::uniform(rng, -2, 2);
  const auto one = RealJet::constant(j.base(), 4, 1.0);
  const auto p = j * one;
  for (const auto& a : multi_indices(4)) CHECK(p[a] == j[a]);
}

TEST_CASE("x1^2 x2 at (1,1): D^(2,1) = 1") {
  const Point b{1, 1};
  const auto x1 = RealJet::coordinate(b, 3, 0);
  const auto x2 = RealJet::coordinate(b, 3, 1);
  const auto f = x1 * x1 * x2;
  // symbolic: d^2/dx1^2 d/dx2 (x1^2 x2) = 2, divided by 2! 1! = 1
  CHECK(f[{2, 1}] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f[{1, 0}] == doctest::Approx(2.0));  // 2 x1 x2
  CHECK(f[{0, 1}] == doctest::Approx(1.0));  // x1^2
  CHECK(f[{1, 1}] == doctest::Approx(2.0));  // 2 x1
  CHECK(f[{0, 0}] == doctest::Approx(1.0));
  CHECK(f[{3, 0}] == 0.0);
}

TEST_CASE("mismatched jets are rejected") {
  const RealJet a({0, 0}, 2), b({0, 0}, 3), c({1, 0}, 2);
  CHECK_THROWS_AS(a + b, UsageError);
  CHECK_THROWS_AS(a * c, UsageError);
  CHECK_THROWS_AS(RealJet({0, 0}, -1), UsageError);
}

TEST_CASE("jet_norm at (3,4)") {
  const auto j = jet_norm({3, 4}, 4);
  CHECK(j.value() == doctest::Approx(5.0));
  CHECK(j[{1, 0}] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(j[{0, 1}] == doctest::Approx(0.8).epsilon(1e-15));
  // d^2/dx1^2 |x| = x2^2 / |x|^3 = 16/125, halved
  CHECK(j[{2, 0}] == doctest::Approx(8.0 / 125.0).epsilon(1e-14));
  const auto norm_f = [](auto a, auto b) { return oracle::hypot(oracle::f128(a), oracle::f128(b)); };
  for (const auto& a : multi_indices(4)) {
    const double fd = fd_derivative<oracle::f128>(norm_f, {3, 4}, a, 1e-2);
    CHECK(std::abs(j[a] - fd) <= 1e-6 * (1 + std::abs(j[a])));
  }
}

TEST_CASE("jet_norm on the axis and at the origin") {
  CHECK(jet_norm({0.7, 0}, 3).value() == 0.7);
  CHECK_THROWS_AS(jet_norm({0, 0}, 2), DomainError);
}

TEST_CASE("jet_norm obeys |D^a |x|| <= C_k |x|^(1-k)") {
  // For a 1-homogeneous function, |x|^(k-1) |D^a| is scale invariant: a single
  // constant per k fits every radius in [0.01, 2].
  auto rng = gen::engine(2);
  std::vector<double> c(5, 0.0);
  for (int i = 0; i < 400; ++i) {
    const Point x = gen::polar(rng, 0.01, 2.0);
    const double r = norm(x);
    const auto j = jet_norm(x, 4);
    for (const auto& a : multi_indices(4))
      c[a.order()] = std::max(c[a.order()], std::abs(j[a]) * std::pow(r, a.order() - 1));
  }
  // The supremum over directions: 1 for k = 0, 1 for k = 1, 1/2 for k = 2.
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] <= 1.0 + 1e-12);
  CHECK(c[2] <= 0.5 + 1e-12);
  for (int k = 0; k <= 4; ++k) CHECK(std::isfinite(c[k]));
}

TEST_CASE("compose_1d: t^2 after the coordinate jet at (2,0)") {
  UniJet<double> sq;
  sq.center = 2.0;
  sq.c = {4.0, 4.0, 1.0};
  const auto h = RealJet::coordinate({2, 0}, 2, 0);
  const auto g = jet_compose_1d(sq, h);
  CHECK(g[{2, 0}] == 1.0);
  CHECK(g[{1, 0}] == 4.0);
  CHECK(g.value() == 4.0);

  UniJet<double> short_outer;
  short_outer.c = {1.0, 0.0};
  CHECK_THROWS_AS(jet_compose_1d(short_outer, h), UsageError);
}

TEST_CASE("compose_1d: exp of a complex jet matches differences") {
  const Point x{0.4, -0.3};
  ComplexJet h = to_complex(RealJet::coordinate(x, 4, 0) * RealJet::coordinate(x, 4, 1));
  h *= std::complex<double>(0.0, 1.5);
  const auto e = jet_compose_1d(exp_unijet(h.value(), 4), h);
  using oracle::f128;
  const auto re = [](f128 a, f128 b) { return boost::multiprecision::cos(f128(1.5) * a * b); };
  const auto im = [](f128 a, f128 b) { return boost::multiprecision::sin(f128(1.5) * a * b); };
  for (const auto& a : multi_indices(4)) {
    const double fre = fd_derivative<f128>(re, x, a, 1e-3);
    const double fim = fd_derivative<f128>(im, x, a, 1e-3);
    CHECK(std::abs(e[a].real() - fre) <= 1e-9);
    CHECK(std::abs(e[a].imag() - fim) <= 1e-9);
  }
}

TEST_CASE("fd_derivative on polynomials and constants") {
  const auto lin = [](auto a, auto) { return a; };
  CHECK(fd_derivative(lin, {0.3, 0.1}, {1, 0}) == doctest::Approx(1.0).epsilon(1e-10));
  const auto cst = [](auto, auto) { return 2.5; };
  for (const auto& a : multi_indices(4))
    if (a.order() > 0) CHECK(std::abs(fd_derivative(cst, {0.3, 0.1}, a)) <= 1e-6);
}

TEST_CASE("Cauchy product is exactly associative and commutative on rationals") {
  using Q = mpq_class;
  auto rng = gen::engine(3);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  auto random_jet = [&] {
    Jet<Q> j({0, 0}, 5);
    for (const auto& a : multi_indices(5)) {
      j[a] = Q(num(rng), den(rng));
      j[a].canonicalize();
    }
    return j;
  };
  for (int trial = 0; trial < 25; ++trial) {
    const auto f = random_jet(), g = random_jet(), h = random_jet();
    const auto l = (f * g) * h, r = f * (g * h);
    const auto fg = f * g, gf = g * f;
    for (const auto& a : multi_indices(5)) {
      CHECK(l[a] == r[a]);
      CHECK(fg[a] == gf[a]);
    }
  }
}

TEST_CASE("compose_plane of a rotation with a translation") {
  const Point x{0.2, 0.1};
  const std::complex<double> w(std::cos(0.3), std::sin(0.3));
  const ComplexJet inner = complex_coordinate(x, 3);
  ComplexJet outer = complex_coordinate({inner.value().real(), inner.value().imag()}, 3);
  outer *= w;
  const auto c = compose_plane(outer, inner);
  CHECK(std::abs(c.value() - w * std::complex<double>(0.2, 0.1)) < 1e-15);
  CHECK(jacobian_det(c) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(c[{2, 0}]) == 0.0);
}
