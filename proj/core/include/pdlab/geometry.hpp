#pragma once

// Exact description of the disk arrangement: disks of radius
// delta_n = 1/(n 2^n) centered at the corners p(n, s) of the regular 2^n-gon on
// the circle of radius 1/n, and the closed annuli E_n within F_n around it.
// Every certificate here is decided in exact rational arithmetic.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "pdlab/bump.hpp"
#include "pdlab/types.hpp"

namespace pdlab {

using Rational = mpq_class;

inline constexpr int kMinLevel = 4;
inline constexpr int kMaxLevel = 62;

void check_level(int n);
void check_disk(int n, std::int64_t s);

/// delta_n = 1/(n 2^n).
Rational disk_radius(int n);
double disk_radius_double(int n);

/// p(n, s) = (1/n) exp(2 pi i s / 2^n), rounded to double.
Point disk_center(int n, std::int64_t s);

/// True when p(n, s) has rational coordinates (angle a multiple of pi/2).
bool center_is_rational(int n, std::int64_t s);
/// Exact coordinates of a rational center.
std::pair<Rational, Rational> rational_center(int n, std::int64_t s);

struct DiskSpec {
  int n = 0;
  std::int64_t s = 0;
  Point center;
  Rational radius;
};

DiskSpec disk_spec(int n, std::int64_t s);

enum class AnnulusKind { E, F };

/// Closed annulus {inner <= |x| <= outer}.
struct AnnulusSpec {
  int n = 0;
  AnnulusKind kind = AnnulusKind::E;
  Rational inner;
  Rational outer;
};

/// E_n: 1/n -+ 1/(4n^2).   F_n: 1/n -+ 1/(2n^2).
AnnulusSpec annulus(int n, AnnulusKind kind);

/// Certified enclosure of the gap between adjacent disks on level n:
///   (2/n) sin(pi/2^n) - 2 delta_n.
/// The lower bound uses sin(y) >= y - y^3/6 with a rational lower bound for pi,
/// the upper bound uses sin(y) <= y with a rational upper bound for pi.
struct GapCertificate {
  int n = 0;
  Rational lower;
  Rational upper;
  bool certified_positive = false;
  double approx = 0.0;
};

GapCertificate adjacent_gap(int n);

/// Which radial bound separates E_n from F_m.
struct SeparationCertificate {
  int n = 0;
  int m = 0;
  bool e_below_f = false;  ///< E_n.outer < F_m.inner, otherwise F_m.outer < E_n.inner
  Rational lower_side;     ///< the smaller of the two compared bounds
  Rational upper_side;
  bool disjoint = false;
};

SeparationCertificate annuli_disjoint(int n, int m);

/// Radial containment of the closed disk of level n in E_n.
struct ContainmentCertificate {
  int n = 0;
  std::int64_t s = 0;
  Rational disk_inner;  ///< 1/n - delta_n
  Rational disk_outer;  ///< 1/n + delta_n
  Rational annulus_inner;
  Rational annulus_outer;
  bool inner_tight = false;  ///< equality on the inner side
  bool outer_tight = false;
  bool contained = false;
};

ContainmentCertificate disk_in_annulus(int n, std::int64_t s);

/// Open annulus {inner < |x| < outer} where phi_n differs from the identity,
/// and the closed band {plateau_inner <= |x| <= plateau_outer} where it is a
/// rigid rotation.
struct TwistBands {
  int n = 0;
  int slope = 0;
  Rational support_inner;
  Rational support_outer;
  Rational plateau_inner;
  Rational plateau_outer;
};

TwistBands twist_bands(int n, TwistSchedule schedule = {});

/// Exact checks that make phi_n Poisson: the level-n disks lie in the plateau,
/// the support stays inside F_n and avoids E_m for every m != n.
struct TwistCertificate {
  int n = 0;
  bool disks_in_plateau = false;
  bool support_in_f = false;
  bool support_avoids_other_e = false;  ///< checked for all m in [4, m_max]
  int m_max = 0;
};

TwistCertificate twist_certificate(int n, int m_max, TwistSchedule schedule = {});

/// Twist supports of levels n != m do not meet.
bool twist_supports_disjoint(int n, int m, TwistSchedule schedule = {});

std::string to_string(const Rational& q);

}  // namespace pdlab
