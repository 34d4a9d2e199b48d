#include "pdlab/verify/sampling.hpp"

#include <cmath>
#include <random>

#include "pdlab/geometry.hpp"

namespace pdlab::verify {

namespace {

std::mt19937_64 engine_for(std::uint64_t seed, int n, std::int64_t salt = 0) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(salt)};
  return std::mt19937_64(seq);
}

Point around(Point c, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double a = kTwoPi * unit(rng);
  return {c.x + r * std::cos(a), c.y + r * std::sin(a)};
}

}  // namespace

std::vector<Point> stratified_samples(int n, std::size_t count, std::uint64_t seed, TwistSchedule schedule,
                                      Strata strata) {
  check_level(n);
  auto rng = engine_for(seed, n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> sector(1, std::int64_t{1} << n);
  const double delta = disk_radius_double(n);
  const TwistBands bands = twist_bands(n, schedule);
  const double r0 = bands.support_inner.get_d();
  const double r1 = bands.support_outer.get_d();

  const auto n_disk = static_cast<std::size_t>(strata.disk * static_cast<double>(count));
  const auto n_shell = static_cast<std::size_t>(strata.shell * static_cast<double>(count));
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < n_disk; ++i) out.push_back(around(disk_center(n, sector(rng)), 1.5 * delta, rng));
  for (std::size_t i = 0; i < n_shell; ++i) {
    const double r = r0 + (r1 - r0) * unit(rng);
    const double a = kTwoPi * unit(rng);
    out.push_back({r * std::cos(a), r * std::sin(a)});
  }
  std::uniform_real_distribution<double> box(-1.1, 1.1);
  while (out.size() < count) {
    const double x = box(rng);
    out.push_back({x, box(rng)});
  }
  return out;
}

std::vector<Point> disk_interior_samples(int n, std::int64_t s, std::size_t count, double max_scaled,
                                         std::uint64_t seed) {
  check_disk(n, s);
  auto rng = engine_for(seed, n, s);
  const Point c = disk_center(n, s);
  const double radius = max_scaled * disk_radius_double(n);
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(around(c, radius, rng));
  return out;
}

}  // namespace pdlab::verify
