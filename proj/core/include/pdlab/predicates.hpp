#pragma once

// Sign predicates on the disk arrangement. Each one runs a floating-point
// filter with a conservative error bound, then falls back to exact rationals
// (rational data) or MPFR interval arithmetic with doubling precision
// (irrational disk centers).

#include <cstdint>
#include <optional>

#include "pdlab/geometry.hpp"

namespace pdlab {

/// Sign of a comparison; `indeterminate` only when the precision cap is hit.
enum class Side { inside, boundary, outside, indeterminate };

/// Sign of |x|^2 - bound^2: inside means |x| < bound.
Side radial_side(Point x, const Rational& bound);

/// Position of x relative to the closed disk of level n, index s.
Side disk_side(Point x, int n, std::int64_t s, int max_precision_bits = 1024);

/// Disk index s in [1, 2^n] whose angular sector contains x (x != 0).
std::int64_t nearest_sector(Point x, int n);

/// x - p(n, s), with the center taken to high precision before subtracting.
Point disk_offset(Point x, int n, std::int64_t s);

}  // namespace pdlab
