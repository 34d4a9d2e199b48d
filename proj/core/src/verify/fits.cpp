#include "pdlab/verify/fits.hpp"

#include <algorithm>
#include <cmath>

namespace pdlab::verify {

std::string to_string(BoundShape shape) {
  switch (shape) {
    case BoundShape::bump_radius: return "delta^-k";
    case BoundShape::series_term: return "n^k 2^(nk) / n!";
    case BoundShape::twist_decay: return "n^(2k) / 2^n";
  }
  return "?";
}

double shape_value(BoundShape shape, int k, double p) {
  switch (shape) {
    case BoundShape::bump_radius: return std::pow(p, -k);
    case BoundShape::series_term: {
      const int n = static_cast<int>(p);
      // log form keeps 2^(nk) from overflowing for large n
      return std::exp(k * std::log(p) + n * k * std::log(2.0) - std::lgamma(p + 1.0));
    }
    case BoundShape::twist_decay: return std::pow(p, 2 * k) / std::ldexp(1.0, static_cast<int>(p));
  }
  return 0.0;
}

nlohmann::json BoundFit::to_json() const {
  auto rows = nlohmann::json::array();
  for (const auto& e : entries)
    rows.push_back({{"parameter", e.parameter}, {"measured", e.measured}, {"shape", e.shape}, {"ratio", e.ratio}});
  return {{"label", label},       {"shape", to_string(shape)}, {"k", k},
          {"level", level},       {"fitted_c", fitted_c},      {"min_ratio", min_ratio},
          {"ratio_spread", ratio_spread()}, {"entries", rows}};
}

double FitPair::relative_change() const {
  if (coarse.fitted_c == 0.0) return fine.fitted_c == 0.0 ? 0.0 : 1.0;
  return std::abs(fine.fitted_c - coarse.fitted_c) / coarse.fitted_c;
}

nlohmann::json FitPair::to_json() const {
  return {{"coarse", coarse.to_json()},
          {"fine", fine.to_json()},
          {"relative_change", relative_change()},
          {"stable", stable()}};
}

BoundFit fit_from_reports(const std::string& label, BoundShape shape, int k, const std::vector<double>& parameters,
                          const std::vector<NormReport>& reports, int level) {
  if (parameters.size() != reports.size()) throw UsageError("parameter and report counts differ");
  BoundFit fit;
  fit.label = label;
  fit.shape = shape;
  fit.k = k;
  fit.level = level;
  fit.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    FitEntry e;
    e.parameter = parameters[i];
    e.measured = reports[i].sup(k, level);
    e.shape = shape_value(shape, k, parameters[i]);
    e.ratio = e.measured / e.shape;
    fit.fitted_c = std::max(fit.fitted_c, e.ratio);
    fit.min_ratio = std::min(fit.min_ratio, e.ratio);
    fit.entries.push_back(e);
  }
  if (fit.entries.empty()) fit.min_ratio = 0.0;
  return fit;
}

FitPair fit_pair(const std::string& label, BoundShape shape, int k, const std::vector<double>& parameters,
                 const std::vector<NormReport>& reports) {
  if (reports.empty()) throw UsageError("no reports to fit");
  const int levels = reports.front().levels();
  return {fit_from_reports(label, shape, k, parameters, reports, 0),
          fit_from_reports(label, shape, k, parameters, reports, levels - 1)};
}

namespace {

void add_fits(FitResult& out, const std::string& label, BoundShape shape, int k_max) {
  for (int k = 0; k <= k_max; ++k) out.fits.push_back(fit_pair(label, shape, k, out.parameters, out.reports));
}

}  // namespace

FitResult lemma_bivector_fit(int k_max, const std::vector<double>& deltas, const Cutoff& chi, Resolution res) {
  FitResult out;
  for (double delta : deltas) {
    if (!(delta > 0.0 && delta <= 1.0)) throw UsageError("delta must lie in (0, 1]");
    const FieldSpec field{"bump", [&](Point x, int order) {
                            return std::vector<RealJet>{radial_bump_jet(x, {0.0, 0.0}, delta, order, chi)};
                          }};
    out.parameters.push_back(delta);
    out.reports.push_back(ck_norm_estimate(field, k_max, disk_grid({0.0, 0.0}, delta, res)));
  }
  add_fits(out, "bump", BoundShape::bump_radius, k_max);
  return out;
}

FitResult series_fit(const Arrangement& arrangement, int k_max, int n_lo, int n_hi, Resolution res) {
  FitResult out;
  for (int n = n_lo; n <= n_hi; ++n) {
    check_level(n);
    // Level-n bumps are translates of each other, so one disk carries the norm.
    const std::int64_t s = std::int64_t{1} << n;
    const FieldSpec field{"pi_n", [&](Point x, int order) { return std::vector<RealJet>{arrangement.u_jet(x, order)}; }};
    out.parameters.push_back(n);
    out.reports.push_back(ck_norm_estimate(field, k_max, disk_grid(disk_center(n, s), disk_radius_double(n), res)));
  }
  add_fits(out, "series", BoundShape::series_term, k_max);
  return out;
}

nlohmann::json TwistFitResult::to_json() const {
  auto fits_json = [](const FitResult& r) {
    auto arr = nlohmann::json::array();
    for (const auto& f : r.fits) arr.push_back(f.to_json());
    return arr;
  };
  return {{"levels", levels},
          {"phi_minus_id", fits_json(phi)},
          {"f_n", fits_json(f)},
          {"exp_f_minus_1", fits_json(expf)},
          {"c0_bound_holds", c0_bound_holds}};
}

TwistFitResult phi_deviation_fit(const RotationFamily& family, int k_max, int n_lo, int n_hi, Resolution res) {
  TwistFitResult out;
  out.c0_bound_holds = true;
  for (int n = n_lo; n <= n_hi; ++n) {
    check_level(n);
    const TwistBands bands = twist_bands(n, family.schedule());
    const Grid grid = shell_grid(bands.support_inner.get_d(), bands.support_outer.get_d(), res);
    const FieldBundle bundle = [&](Point x, int order) {
      return std::vector<std::vector<RealJet>>{
          components(family.phi_deviation_jet(n, x, order)),
          components(f_n_jet(x, n, order, family.schedule(), family.cutoff())),
          components(family.exp_twist_jet(n, x, order))};
    };
    auto reports = ck_norm_estimate_many({"phi_minus_id", "f_n", "exp_f_minus_1"}, bundle, k_max, grid);
    out.levels.push_back(n);
    out.phi.reports.push_back(reports[0]);
    out.f.reports.push_back(reports[1]);
    out.expf.reports.push_back(reports[2]);

    const double bound = kTwoPi / std::ldexp(1.0, n);
    for (const Point& x : grid.refined().points()) {
      const Point y = family.phi_eval(n, x);
      if (!(distance(x, y) <= bound)) out.c0_bound_holds = false;
    }
  }
  out.phi.parameters = out.f.parameters = out.expf.parameters = out.levels;
  add_fits(out.phi, "phi_minus_id", BoundShape::twist_decay, k_max);
  add_fits(out.f, "f_n", BoundShape::twist_decay, k_max);
  add_fits(out.expf, "exp_f_minus_1", BoundShape::twist_decay, k_max);
  return out;
}

namespace {

// Sums term(i) for i >= first until the terms are decreasing and negligible.
template <typename Term>
double positive_tail(int first, Term term) {
  ext_real sum = 0, prev = 0;
  for (int i = first;; ++i) {
    const ext_real t = term(i);
    sum += t;
    if (i > first && t <= prev && t <= sum * ext_real(1e-34)) break;
    if (i > first + 100000) throw DomainError("tail summation did not settle");
    prev = t;
  }
  return static_cast<double>(sum);
}

}  // namespace

double series_tail(int k, int N) {
  if (N < kMinLevel || k < 0) throw UsageError("series_tail needs N >= 4 and k >= 0");
  using boost::multiprecision::exp;
  using boost::multiprecision::lgamma;
  using boost::multiprecision::log;
  return positive_tail(N + 1, [k](int n) {
    const ext_real en = n;
    return exp(ext_real(k) * log(en) + ext_real(n) * k * log(ext_real(2)) - lgamma(en + 1));
  });
}

double twist_tail(int k, int n) {
  if (n < 1 || k < 0) throw UsageError("twist_tail needs n >= 1 and k >= 0");
  using boost::multiprecision::ldexp;
  using boost::multiprecision::pow;
  return positive_tail(n, [k](int i) { return ldexp(pow(ext_real(i), 2 * k), -i); });
}

int tail_epsilon_index(int k, double eps, double c_k) {
  if (!(eps > 0.0) || !(c_k >= 0.0)) throw UsageError("tail_epsilon_index needs eps > 0 and c_k >= 0");
  for (int n = kMinLevel; n < 4096; ++n)
    if (c_k * twist_tail(k, n) <= eps / 2) return n;
  throw DomainError("epsilon below the resolvable tail");
}

}  // namespace pdlab::verify
