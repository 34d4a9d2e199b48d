#include "pdlab/bump.hpp"

#include <cmath>

namespace pdlab {

UniJet<double> Cutoff::jet(double t, int order) const {
  const auto ext = chi_series<ext_real>(ext_real(t), order, shape_);
  UniJet<double> u;
  u.center = t;
  u.c.reserve(ext.size());
  for (const auto& v : ext) u.c.push_back(static_cast<double>(v));
  return u;
}

double chi_eval(double t) { return chi_value(t); }

UniJet<double> chi_jet(double t, int order) { return Cutoff{}.jet(t, order); }

RealJet radial_bump_jet_at_offset(Point anchor, Point offset, double delta, int order,
                                  const Cutoff& chi) {
  if (!(delta > 0)) throw UsageError("bump radius must be positive");
  const double r = norm(offset);
  const double t = r / delta;
  if (t >= 1.0) return RealJet(anchor, order);
  if (t <= chi.plateau_half_width()) return RealJet::constant(anchor, order, chi(t));
  RealJet arg = jet_norm(offset, order).rebased(anchor);
  arg *= 1.0 / delta;
  return jet_compose_1d(chi.jet(arg.value(), order), arg);
}

RealJet radial_bump_jet(Point x, Point p, double delta, int order, const Cutoff& chi) {
  return radial_bump_jet_at_offset(x, x - p, delta, order, chi);
}

double twist_argument(int n, double r, TwistSchedule schedule) {
  const double kn = static_cast<double>(schedule.slope(n)) * n;
  return kn * (n * r - 1.0);
}

namespace {
double twist_amplitude(int n) { return kTwoPi / std::ldexp(1.0, n); }
}  // namespace

std::complex<double> f_n_eval(Point x, int n, TwistSchedule schedule, const Cutoff& chi) {
  if (n < 4) throw UsageError("twist index n must be >= 4");
  return {0.0, twist_amplitude(n) * chi(twist_argument(n, norm(x), schedule))};
}

ComplexJet f_n_jet(Point x, int n, int order, TwistSchedule schedule, const Cutoff& chi) {
  if (n < 4) throw UsageError("twist index n must be >= 4");
  const double r = norm(x);
  const std::complex<double> amp{0.0, twist_amplitude(n)};
  // |x| < 1/(2n) puts the argument below -1 for every slope >= 2.
  if (r < 0.5 / n) return ComplexJet(x, order);
  const double t0 = twist_argument(n, r, schedule);
  if (std::abs(t0) >= 1.0) return ComplexJet(x, order);
  if (std::abs(t0) <= chi.plateau_half_width()) return ComplexJet::constant(x, order, amp * chi(t0));

  const double kn = static_cast<double>(schedule.slope(n)) * n;
  RealJet arg = jet_norm(x, order);
  arg *= kn * n;
  arg.add_constant(-kn);
  arg[{0, 0}] = t0;
  RealJet profile = jet_compose_1d(chi.jet(t0, order), arg);
  return amp * to_complex(profile);
}

}  // namespace pdlab
