#include <doctest.h>

#include "pdlab/diffeo.hpp"
#include "support.hpp"

using namespace pdlab;
using oracle::f128;

TEST_CASE("BitWord parsing and equality") {
  const auto w = BitWord::parse("4:1011");
  CHECK(w.start() == 4);
  CHECK(w.end() == 8);
  CHECK(w.active(4));
  CHECK_FALSE(w.active(5));
  CHECK(w.active_levels() == std::vector<int>{4, 6, 7});
  CHECK(w.to_string() == "4:1011");
  CHECK(BitWord::parse("4:10110") == w);
  CHECK(BitWord::from_levels({4, 6, 7}) == w);
  CHECK(BitWord::parse("6:0").empty());
  CHECK(BitWord::parse("4:").empty());
  for (const char* bad : {"", "3:1", "4:12", "x:1", "4", ":1"}) CHECK_THROWS_AS(BitWord::parse(bad), UsageError);
}

TEST_CASE("phi_n rotates p(n,1) onto p(n,2)") {
  const RotationFamily fam;
  for (int n = 4; n <= 40; ++n) {
    const Point y = fam.phi_eval(n, disk_center(n, 1));
    const Point c2 = disk_center(n, 2);
    CHECK(distance(y, c2) <= 4e-16);
  }
}

TEST_CASE("phi_n is the identity off its support and norm-preserving everywhere") {
  const RotationFamily fam;
  auto rng = gen::engine(40);
  for (int n = 4; n <= 20; ++n) {
    const double w = 1.0 / (oracle::slope(n) * n * n);
    for (int i = 0; i < 200; ++i) {
      const Point far = gen::polar(rng, 1.0 / n + 1.001 * w, 1.0 / n + 3 * w);
      const Point y = fam.phi_eval(n, far);
      CHECK(y.x == far.x);
      CHECK(y.y == far.y);
      const Point x = gen::polar(rng, 1.0 / n - w, 1.0 / n + w);
      CHECK(norm(fam.phi_eval(n, x)) == doctest::Approx(norm(x)).epsilon(1e-15));
      const Point back = fam.phi_inverse_eval(n, fam.phi_eval(n, x));
      CHECK(distance(back, x) <= 1e-15);
    }
  }
}

TEST_CASE("phi_n jets match 128-bit differences") {
  const RotationFamily fam;
  auto rng = gen::engine(41);
  for (int n : {4, 5, 6, 9, 15}) {
    const double w = 1.0 / (oracle::slope(n) * n * n);
    for (int i = 0; i < 8; ++i) {
      const double r = 1.0 / n + (i % 2 ? 1 : -1) * gen::uniform(rng, 0.56, 0.94) * w;
      const double a = gen::uniform(rng, 0, 2 * M_PI);
      const Point x{r * std::cos(a), r * std::sin(a)};
      const auto j = fam.phi_deviation_jet(n, x, 4);
      const auto dev_re = [n](f128 p, f128 q) {
        const f128 t = oracle::twist_angle(n, oracle::hypot(p, q));
        return p * boost::multiprecision::cos(t) - q * boost::multiprecision::sin(t) - p;
      };
      const auto dev_im = [n](f128 p, f128 q) {
        const f128 t = oracle::twist_angle(n, oracle::hypot(p, q));
        return p * boost::multiprecision::sin(t) + q * boost::multiprecision::cos(t) - q;
      };
      for (const auto& m : multi_indices(4)) {
        const double fre = fd_derivative<f128>(dev_re, x, m, 1e-4 * w);
        const double fim = fd_derivative<f128>(dev_im, x, m, 1e-4 * w);
        CHECK(std::abs(j[m].real() - fre) <= 1e-5 * (1 + std::abs(j[m].real())));
        CHECK(std::abs(j[m].imag() - fim) <= 1e-5 * (1 + std::abs(j[m].imag())));
      }
    }
  }
}

TEST_CASE("det D phi_n = 1") {
  // x -> x exp(i theta(|x|)) preserves area for every profile theta.
  const RotationFamily fam;
  auto rng = gen::engine(42);
  for (int n = 4; n <= 20; ++n) {
    for (int i = 0; i < 100; ++i) {
      const Point x = gen::polar(rng, 1.0 / n - 0.6 / (n * n), 1.0 / n + 0.6 / (n * n));
      CHECK(fam.jacobian(n, x) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("pushforward law holds at disk and support samples") {
  const Arrangement arr;
  const RotationFamily fam;
  auto rng = gen::engine(43);
  for (int n = 4; n <= 12; ++n) {
    const std::int64_t count = std::int64_t{1} << n;
    for (int i = 0; i < 500; ++i) {
      const std::int64_t s = 1 + static_cast<std::int64_t>(gen::uniform(rng, 0, 1) * (count - 1));
      const Point x = gen::around(rng, disk_center(n, s), 0.0, 1.5 * disk_radius_double(n));
      CHECK(fam.invariance_residual(arr, n, x) <= 1e-12);
      const Point y = gen::polar(rng, 0.0, 1.1);
      CHECK(fam.invariance_residual(arr, n, y) <= 1e-12);
    }
  }
}

TEST_CASE("a uniform slope of 4 breaks the pushforward law at levels 4 and 5") {
  const Arrangement arr;
  const RotationFamily literal(Cutoff{}, TwistSchedule(TwistSchedule::Kind::literal));
  for (int n : {4, 5}) {
    double worst = 0.0;
    const Point c = disk_center(n, 5);
    const double d = disk_radius_double(n);
    for (int i = 0; i < 64; ++i) {
      const double a = 2 * M_PI * i / 64;
      worst = std::max(worst, literal.invariance_residual(arr, n, {c.x + 0.95 * d * std::cos(a), c.y + 0.95 * d * std::sin(a)}));
    }
    CHECK(worst > 1e-6);
  }
}

TEST_CASE("dispatching word evaluation equals naive composition") {
  const RotationFamily fam;
  auto rng = gen::engine(44);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::uint8_t> bits(12);
    for (auto& b : bits) b = gen::uniform(rng, 0, 1) < 0.5;
    const BitWord w(4, bits);
    for (int i = 0; i < 200; ++i) {
      const Point x = gen::polar(rng, 0.05, 0.3);
      const Point a = fam.word_eval(w, x), b = fam.word_eval_naive(w, x);
      CHECK(a.x == b.x);
      CHECK(a.y == b.y);
    }
  }
}

TEST_CASE("composed word jets equal the sum of factor deviations") {
  const RotationFamily fam;
  const auto w = BitWord::parse("4:110101101");
  auto rng = gen::engine(45);
  for (int n : w.active_levels()) {
    const double width = 1.0 / (oracle::slope(n) * n * n);
    for (int i = 0; i < 30; ++i) {
      const Point x = gen::polar(rng, 1.0 / n - width, 1.0 / n + width);
      const auto c = fam.word_deviation_jet(w, x, 3);
      const auto s = fam.word_deviation_sum_jet(w, x, 3);
      for (const auto& a : multi_indices(3)) CHECK(std::abs(c[a] - s[a]) <= 1e-9);
    }
  }
}
