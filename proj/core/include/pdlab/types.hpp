#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/float128.hpp>

namespace pdlab {

/// Point of the plane, identified with C where convenient.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double c, Point a) { return {c * a.x, c * a.y}; }
};

inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// 128-bit binary float used where cancellation near the cutoff flats matters.
using ext_real = boost::multiprecision::float128;

/// Caller violated a precondition (bad index, mismatched jets, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation outside the domain of a non-smooth function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An adaptive-precision predicate ran out of precision.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked mathematical invariant failed on concrete input.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace pdlab
