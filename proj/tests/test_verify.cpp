#include <doctest.h>

#include <set>

#include "pdlab/verify/fits.hpp"
#include "pdlab/verify/obstruction.hpp"
#include "pdlab/verify/sampling.hpp"
#include "support.hpp"

using namespace pdlab;
using namespace pdlab::verify;

TEST_CASE("grid nodes survive refinement bit for bit") {
  Grid g;
  g.add(PolarPatch{{0.1, 0.2}, 0.0, 0.3, 8, 12});
  g.add(PolarPatch{{0.0, 0.0}, 0.2, 0.25, 5, 7});
  g.add(CartesianPatch{-1.1, 1.1, -0.7, 0.9, 10, 6});
  const auto coarse = g.points();
  const auto fine = g.refined().points();
  CHECK(coarse.size() == g.size());
  CHECK(fine.size() == g.refined().size());
  std::set<std::pair<double, double>> fine_set;
  for (const auto& p : fine) fine_set.insert({p.x, p.y});
  for (const auto& p : coarse) CHECK(fine_set.count({p.x, p.y}) == 1);
}

TEST_CASE("norm of the zero field is zero") {
  const FieldSpec zero{"zero", [](Point x, int k) { return std::vector<RealJet>{RealJet(x, k)}; }};
  const auto r = ck_norm_estimate(zero, 3, background_grid(16));
  CHECK(r.value() == 0.0);
  CHECK(r.history.size() == 2);
}

TEST_CASE("sampled sup of u is 1/24") {
  const Arrangement arr;
  const FieldSpec u{"u", [&](Point x, int k) { return std::vector<RealJet>{arr.u_jet(x, k)}; }};
  Grid g = background_grid(64);
  g.add(PolarPatch{disk_center(4, 16), 0.0, disk_radius_double(4), 4, 8});
  const auto r = ck_norm_estimate(u, 0, g);
  CHECK(std::abs(r.value() - 1.0 / 24) <= 1e-6);
}

TEST_CASE("refinement histories are non-decreasing") {
  const RotationFamily fam;
  const Arrangement arr;
  auto rng = gen::engine(60);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 4 + trial;
    const auto b = twist_bands(n);
    const Resolution res{3 + trial, 5 + 3 * trial};
    const FieldBundle fields = [&](Point x, int k) {
      return std::vector<std::vector<RealJet>>{components(fam.phi_deviation_jet(n, x, k)), {arr.u_jet(x, k)}};
    };
    Grid g = shell_grid(b.support_inner.get_d(), b.support_outer.get_d(), res);
    g.add(PolarPatch{disk_center(n, 1), 0.0, disk_radius_double(n), res.radial, res.angular});
    const double lo = gen::uniform(rng, -1.1, 0.0), hi = gen::uniform(rng, 0.0, 1.1);
    g.add(CartesianPatch{lo, hi, lo, hi, 7, 9});
    const auto reports = ck_norm_estimate_many({"phi", "u"}, fields, 2, g, 3);
    for (const auto& r : reports) {
      REQUIRE(r.history.size() == 3);
      CHECK(r.history[0] <= r.history[1]);
      CHECK(r.history[1] <= r.history[2]);
      for (int k = 0; k <= 2; ++k) CHECK(r.sup(k, 0) <= r.sup(k, 2));
    }
  }
}

TEST_CASE("thread count does not change results") {
  const RotationFamily fam;
  const FieldSpec phi{"phi", [&](Point x, int k) { return components(fam.phi_deviation_jet(5, x, k)); }};
  const auto b = twist_bands(5);
  const Grid g = shell_grid(b.support_inner.get_d(), b.support_outer.get_d(), {32, 64});
  set_thread_count(1);
  const auto one = ck_norm_estimate(phi, 3, g);
  set_thread_count(4);
  const auto four = ck_norm_estimate(phi, 3, g);
  set_thread_count(0);
  CHECK(one.level_sups == four.level_sups);
}

TEST_CASE("phi_4 - id on E_4: at most 2 pi / 16, at least 90% of the exact sup") {
  const RotationFamily fam;
  const FieldSpec phi{"phi", [&](Point x, int k) { return components(fam.phi_deviation_jet(4, x, k)); }};
  const auto r = ck_norm_estimate(phi, 0, shell_grid(15.0 / 64, 17.0 / 64, {16, 256}));
  // E_4 lies in the plateau, where phi_4 rotates by 2 pi / 16
  const double exact = 17.0 / 64 * 2 * std::sin(M_PI / 16);
  CHECK(r.value() <= 2 * M_PI / 16);
  CHECK(r.value() >= 0.9 * exact);
  CHECK(r.value() <= exact * (1 + 1e-14));
}

TEST_CASE("bump fit: C_0 = 1 and delta^k-scaled norms are constant") {
  const std::vector<double> deltas{1.0, 0.5, 0.25, 0.125, 1.0 / 64, 1.0 / 128};
  const auto fit = lemma_bivector_fit(2, deltas, Cutoff{}, {32, 32});
  CHECK(fit.fits.size() == 3);
  CHECK(fit.fits[0].fine.fitted_c == 1.0);
  CHECK(fit.fits[0].fine.min_ratio == 1.0);
  // max |chi'| = 4 at t = 3/4, a grid node
  CHECK(fit.fits[1].fine.fitted_c == doctest::Approx(4.0).epsilon(1e-12));
  for (int k = 1; k <= 2; ++k) CHECK(fit.fits[k].fine.ratio_spread() <= 0.5);
  CHECK(fit.fits[2].stable());
}

TEST_CASE("series fit uses n^k 2^(nk) / n!") {
  CHECK(shape_value(BoundShape::series_term, 0, 4) == doctest::Approx(1.0 / 24));
  CHECK(shape_value(BoundShape::series_term, 1, 4) == doctest::Approx(4.0 * 16 / 24));
  CHECK(shape_value(BoundShape::twist_decay, 2, 6) == doctest::Approx(1296.0 / 64));
  CHECK(shape_value(BoundShape::bump_radius, 3, 0.5) == 8.0);
  const Arrangement arr;
  const auto fit = series_fit(arr, 1, 4, 8, {16, 32});
  CHECK(fit.fits[0].fine.fitted_c == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& e : fit.fits[0].fine.entries) CHECK(e.measured == doctest::Approx(1 / oracle::factorial(int(e.parameter))));
}

TEST_CASE("series tails") {
  CHECK(series_tail(0, 4) == doctest::Approx(std::exp(1.0) - 65.0 / 24).epsilon(1e-15));
  double prev = 1e300;
  for (int N = 4; N <= 60; ++N) {
    const double t = series_tail(0, N);
    CHECK(t < prev);
    prev = t;
  }
  for (int k = 1; k <= 4; ++k) {
    // direct summation oracle in long double
    long double sum = 0;
    for (int n = 9; n < 400; ++n)
      sum += std::exp(k * std::log((long double)n) + n * k * std::log(2.0L) - std::lgamma((long double)n + 1));
    CHECK(series_tail(k, 8) == doctest::Approx(static_cast<double>(sum)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(series_tail(0, 3), UsageError);
}

TEST_CASE("twist tails and epsilon indices") {
  CHECK(twist_tail(0, 4) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(twist_tail(0, 10) == doctest::Approx(std::ldexp(1.0, -9)).epsilon(1e-15));
  // 2 pi 2^(1-n) <= 1/2 first at n = 5
  CHECK(tail_epsilon_index(0, 1.0, 2 * M_PI) == 5);
  CHECK(2 * M_PI * twist_tail(0, 5) <= 0.5);
  CHECK(2 * M_PI * twist_tail(0, 4) > 0.5);
  CHECK(tail_epsilon_index(2, 1e9, 100.0) == 4);
  for (int k = 0; k <= 3; ++k) {
    int prev = 4;
    for (int j = 0; j <= 50; ++j) {
      const int n = tail_epsilon_index(k, std::ldexp(1.0, -j), 17.0);
      CHECK(n >= prev);
      CHECK(17.0 * twist_tail(k, n) <= std::ldexp(1.0, -j) / 2);
      if (n > 4) CHECK(17.0 * twist_tail(k, n - 1) > std::ldexp(1.0, -j) / 2);
      prev = n;
    }
  }
  CHECK_THROWS_AS(tail_epsilon_index(0, 0.0, 1.0), UsageError);
}

TEST_CASE("straight paths between neighboring centers leave the support") {
  const Arrangement arr;
  for (int n : {4, 5, 6, 7, 10}) {
    const double h = adjacent_gap(n).approx / 10;
    const auto path = segment_path(disk_center(n, 1), disk_center(n, 2), h);
    const auto cert = path_obstruction_check(arr, n, path, h);
    CHECK(cert.verdict == PathVerdict::leaves_rank_two);
    REQUIRE(cert.witness_index.has_value());
    const Point w = path[*cert.witness_index];
    CHECK(arr.u_eval(w) == 0.0);
    CHECK(oracle::u_brute(w, std::min(n + 1, 9)) == 0.0);
  }
}

TEST_CASE("paths that stay in the disk are confined") {
  const Arrangement arr;
  const int n = 4;
  const Point c = disk_center(n, 1);
  const double h = adjacent_gap(n).approx / 10;
  CHECK(path_obstruction_check(arr, n, {c, c, c}, h).verdict == PathVerdict::confined);
  const double d = disk_radius_double(n);
  std::vector<Point> loop{c};
  for (int i = 1; i <= 40; ++i)
    loop.push_back({c.x + 0.8 * d * std::sin(M_PI * i / 40), c.y + 0.3 * d * std::sin(2 * M_PI * i / 40)});
  CHECK(path_obstruction_check(arr, n, loop, h).verdict == PathVerdict::confined);
  CHECK_THROWS_AS(path_obstruction_check(arr, n, {disk_center(n, 2)}, h), UsageError);
}

TEST_CASE("no confinement certificate for paths that leave the disk") {
  const Arrangement arr;
  auto rng = gen::engine(61);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 3;
    const Point c = disk_center(n, 1);
    const double d = disk_radius_double(n);
    const double gap = adjacent_gap(n).approx;
    std::vector<Point> path{c};
    const int steps = 2 + trial % 7;
    for (int i = 0; i < steps; ++i) {
      // hop between random disks of level n, or near them
      const std::int64_t s = 1 + static_cast<std::int64_t>(gen::uniform(rng, 0, 3));
      path.push_back(gen::around(rng, disk_center(n, s), 0.0, 1.2 * d));
    }
    const double h = gen::uniform(rng, 0.1, 3.0) * gap;
    const auto cert = path_obstruction_check(arr, n, path, h);
    bool exits = false;
    for (const auto& p : path) {
      const auto [cx, cy] = oracle::center(n, 1);
      exits = exits || oracle::hypot(oracle::f128(p.x) - cx, oracle::f128(p.y) - cy) > oracle::delta(n);
    }
    if (exits) CHECK(cert.verdict != PathVerdict::confined);
  }
}

TEST_CASE("distinct component witnesses") {
  const Arrangement arr;
  const RotationFamily fam;
  const auto w = distinct_component_witness(fam, arr, BitWord::parse("4:1"), BitWord::parse("4:0"));
  CHECK(w.n == 4);
  CHECK(w.moving_word == 1);
  CHECK(w.succeeded);
  CHECK(w.fixed_exactly);
  const auto w7 = distinct_component_witness(fam, arr, BitWord::parse("4:1010"), BitWord::parse("4:101111"));
  CHECK(w7.n == 7);
  CHECK(w7.moving_word == 2);
  CHECK(w7.succeeded);
  CHECK_THROWS_AS(distinct_component_witness(fam, arr, BitWord::parse("4:101"), BitWord::parse("4:1010")),
                  UsageError);
}

TEST_CASE("word deviation: composed equals summed") {
  const RotationFamily fam;
  const auto r = word_deviation_norm(fam, BitWord::parse("4:1101"), 2, 340.0, {16, 64});
  CHECK(r.pointwise_discrepancy <= 1e-9);
  CHECK(std::abs(r.composed_norm - r.summed_norm) <= 1e-9);
  CHECK(std::abs(r.composed_norm - r.max_factor_norm) <= 1e-9);
  CHECK(r.composed_norm <= r.factor_norm_sum);
  CHECK(r.tail_bound == doctest::Approx(340.0 * twist_tail(2, 4)));
}

TEST_CASE("stratified samples are reproducible") {
  const auto a = stratified_samples(7, 1000, 99), b = stratified_samples(7, 1000, 99);
  const auto c = stratified_samples(7, 1000, 100);
  CHECK(a.size() == 1000);
  bool same = true, differ = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && a[i].x == b[i].x && a[i].y == b[i].y;
    differ = differ || a[i].x != c[i].x;
  }
  CHECK(same);
  CHECK(differ);
}
