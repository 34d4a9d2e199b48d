#pragma once

// Stratified random samples for level n, reproducible from a seed.

#include <cstdint>
#include <vector>

#include "pdlab/bump.hpp"
#include "pdlab/types.hpp"

namespace pdlab::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Strata {
  double disk = 0.4;        ///< within 1.5 delta_n of a random level-n center
  double shell = 0.4;       ///< uniform in the twist support annulus
  double background = 0.2;  ///< uniform in [-1.1, 1.1]^2
};

/// `count` points: the strata fractions are rounded down, the background takes the rest.
std::vector<Point> stratified_samples(int n, std::size_t count, std::uint64_t seed = kDefaultSeed,
                                      TwistSchedule schedule = {}, Strata strata = {});

/// Points strictly inside disk (n, s) with |x - p| / delta_n <= max_scaled.
std::vector<Point> disk_interior_samples(int n, std::int64_t s, std::size_t count, double max_scaled,
                                         std::uint64_t seed = kDefaultSeed);

}  // namespace pdlab::verify
