#include <doctest.h>

#include "pdlab/fibered.hpp"
#include "pdlab/verify/sampling.hpp"
#include "support.hpp"

using namespace pdlab;

namespace {

struct Fixture {
  Arrangement arr;
  RotationFamily fam;
  FiberedStructure fib{arr, fam, 2.5};
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "f = 1 + u and leaf areas scale with the fiber volume") {
  CHECK(fib.f_eval({0.0, 0.0}) == 1.0);
  CHECK(fib.f_excess({0.25, 0.0}) == 1.0 / 24);
  CHECK(fib.leaf_area({0.25, 0.0}) == doctest::Approx(2.5 * (1 + 1.0 / 24)));
  CHECK(fib.above_one({0.25, 0.0}));
  CHECK_FALSE(fib.above_one({0.25 + 1.0 / 64, 0.0}));  // closed-disk boundary, u = 0 there
  CHECK_FALSE(fib.above_one({0.5, 0.0}));
}

TEST_CASE_FIXTURE(Fixture, "the set {f > 1} is the union of open disks") {
  auto rng = gen::engine(50);
  for (int i = 0; i < 5000; ++i) {
    const int n = 4 + i % 6;
    const Point x = gen::around(rng, disk_center(n, 1 + i % 16), 0.0, 0.99 * disk_radius_double(n));
    CHECK(fib.above_one(x));
    CHECK(fib.f_excess(x) > 0.0);
  }
}

TEST_CASE_FIXTURE(Fixture, "twists preserve f") {
  for (int n = 4; n <= 12; ++n) {
    const auto samples = verify::stratified_samples(n, 4000, 77);
    CHECK(fib.f_invariance_residual(n, samples) <= 1e-12);
  }
}

TEST_CASE_FIXTURE(Fixture, "r_project recovers the base map of psi x id") {
  const auto samples = verify::stratified_samples(5, 3000, 78);
  const BaseMap twist = base_map::Twist{6};
  const auto r = fib.r_project(product_with_identity(twist), samples);
  REQUIRE(std::holds_alternative<base_map::Twist>(r));
  CHECK(std::get<base_map::Twist>(r).n == 6);
  const auto w = fib.r_project(product_with_identity(base_map::Word{BitWord::parse("4:111")}), samples);
  CHECK(std::get<base_map::Word>(w).word == BitWord::parse("4:111"));
  CHECK(std::holds_alternative<base_map::Identity>(fib.r_project(product_with_identity(base_map::Identity{}), samples)));
  CHECK_THROWS_AS(fib.r_project(product_with_identity(base_map::Rotation{0.05}), samples), InvariantViolation);
  // 2 pi / 32 permutes the level-5 disks but moves level-4 disks into gaps
  const auto level4 = verify::stratified_samples(4, 3000, 79);
  CHECK_THROWS_AS(fib.r_project(product_with_identity(base_map::Rotation{2 * M_PI / 32}), level4),
                  InvariantViolation);
  CHECK_NOTHROW(fib.r_project(product_with_identity(base_map::Rotation{2 * M_PI / 16}), level4, 1e-12));
}

TEST_CASE_FIXTURE(Fixture, "phi_n sends the component around p(n,1) onto the one around p(n,2)") {
  for (int n = 4; n <= 8; ++n) {
    const auto w = component_permutation_witness(fib, arr, base_map::Twist{n}, n);
    CHECK(w.moved);
    CHECK(w.to_s == 2);
    CHECK(w.interior_mapped_onto);
    CHECK(w.interior_samples == 64);
  }
  const auto fixed = component_permutation_witness(fib, arr, base_map::Twist{5}, 4);
  CHECK_FALSE(fixed.moved);
  const auto other = component_permutation_witness(fib, arr, base_map::Identity{}, 6, 9);
  CHECK_FALSE(other.moved);
}
