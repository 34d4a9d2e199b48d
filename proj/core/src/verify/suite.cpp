#include "pdlab/verify/suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pdlab/fibered.hpp"
#include "pdlab/verify/fits.hpp"
#include "pdlab/verify/obstruction.hpp"

namespace pdlab::verify {

namespace {

nlohmann::json resolution_json(Resolution r) { return {r.radial, r.angular}; }

const char* cutoff_name(CutoffShape s) { return s == CutoffShape::smooth ? "smooth" : "no-plateau"; }
const char* schedule_name(TwistSchedule s) {
  return s.kind() == TwistSchedule::Kind::adapted ? "adapted" : "literal";
}

Check make_check(std::string name, bool ok, nlohmann::json value = nullptr, nlohmann::json tolerance = nullptr,
                 nlohmann::json detail = nullptr) {
  Check c;
  c.name = std::move(name);
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.value = std::move(value);
  c.tolerance = std::move(tolerance);
  c.detail = std::move(detail);
  return c;
}

Check indeterminate_check(std::string name, const std::string& what) {
  Check c;
  c.name = std::move(name);
  c.status = CheckStatus::indeterminate;
  c.detail = {{"predicate", what}};
  return c;
}

Arrangement make_arrangement(const RunConfig& config) {
  LocateOptions opts;
  opts.max_precision_bits = config.precision_bits;
  return Arrangement(Cutoff(config.cutoff), opts);
}

RotationFamily make_family(const RunConfig& config) { return RotationFamily(Cutoff(config.cutoff), config.schedule); }

int clamp_hi(int n_max, int cap) { return std::min(n_max, cap); }

nlohmann::json fit_rows(const std::string& family, const FitResult& r) {
  auto rows = nlohmann::json::array();
  for (const auto& pair : r.fits) {
    for (const BoundFit* fit : {&pair.coarse, &pair.fine}) {
      for (const auto& e : fit->entries)
        rows.push_back({family, fit->k, fit == &pair.coarse ? "coarse" : "fine", e.parameter, e.measured, e.shape,
                        e.ratio});
    }
  }
  return rows;
}

void add_fit_checks(SuiteResult& out, const std::string& family, const FitResult& r, int gated_order) {
  for (const auto& pair : r.fits) {
    Check c = make_check(family + ".stable.k" + std::to_string(pair.fine.k), pair.stable(),
                         {{"coarse_c", pair.coarse.fitted_c},
                          {"fine_c", pair.fine.fitted_c},
                          {"relative_change", pair.relative_change()}},
                         0.05, {{"ratio_spread", pair.fine.ratio_spread()}});
    c.gating = pair.fine.k <= gated_order;
    out.checks.push_back(std::move(c));
  }
}

std::vector<Point> arc_path(int n, double h, bool forward) {
  // along the circle of radius 1/n from p(n,1) to p(n,2)
  const double radius = 1.0 / n;
  const double a0 = kTwoPi / std::ldexp(1.0, n);
  const double a1 = forward ? 2 * a0 : 2 * a0 - kTwoPi;
  const double chord_step = 2 * std::asin(std::min(1.0, h / (2 * radius)));
  const auto steps = static_cast<int>(std::ceil(std::abs(a1 - a0) / chord_step * (1 + 1e-9)));
  std::vector<Point> out{disk_center(n, 1)};
  for (int i = 1; i < steps; ++i) {
    const double a = a0 + (a1 - a0) * i / steps;
    out.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  out.push_back(disk_center(n, 2));
  return out;
}

std::vector<Point> polyline_path(const std::vector<Point>& corners, double h) {
  std::vector<Point> out{corners.front()};
  for (std::size_t i = 1; i < corners.size(); ++i) {
    auto seg = segment_path(corners[i - 1], corners[i], h);
    out.insert(out.end(), seg.begin() + 1, seg.end());
  }
  return out;
}

std::vector<Point> jitter_path(int n, double h, std::uint64_t seed) {
  const Point a = disk_center(n, 1), b = disk_center(n, 2);
  const Point d = b - a;
  const double len = norm(d);
  const Point perp{-d.y / len, d.x / len};
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  const double delta = disk_radius_double(n);
  std::vector<Point> corners{a};
  constexpr int kCorners = 24;
  for (int i = 1; i < kCorners; ++i) {
    const double t = static_cast<double>(i) / kCorners;
    corners.push_back(a + t * d + (delta * jitter(rng)) * perp);
  }
  corners.push_back(b);
  return polyline_path(corners, h);
}

// Independent exit test: some point farther than delta_n from p(n,1), in long double.
bool exits_start_disk(int n, const std::vector<Point>& path) {
  const long double delta = 1.0L / (static_cast<long double>(n) * std::ldexp(1.0L, n));
  const long double angle = 2.0L * 3.141592653589793238462643383279502884L / std::ldexp(1.0L, n);
  const long double cx = std::cos(angle) / n, cy = std::sin(angle) / n;
  for (const auto& p : path) {
    const long double dx = p.x - cx, dy = p.y - cy;
    if (std::sqrt(dx * dx + dy * dy) > delta * (1 + 1e-12L)) return true;
  }
  return false;
}

bool same_base_map(const BaseMap& a, const BaseMap& b) {
  if (a.index() != b.index()) return false;
  if (const auto* t = std::get_if<base_map::Twist>(&a)) return t->n == std::get<base_map::Twist>(b).n;
  if (const auto* w = std::get_if<base_map::Word>(&a)) return w->word == std::get<base_map::Word>(b).word;
  if (const auto* r = std::get_if<base_map::Rotation>(&a)) return r->angle == std::get<base_map::Rotation>(b).angle;
  return true;
}

}  // namespace

void RunConfig::validate() const {
  if (n_max < kMinLevel || n_max > kMaxLevel) throw UsageError("n_max must lie in [4, 62]");
  if (jet_order < 0 || jet_order > kDefaultMaxJetOrder) throw UsageError("jet order out of range");
  if (gated_order < 0 || gated_order > jet_order) throw UsageError("gated order must lie in [0, jet order]");
  for (const Resolution& r : {bump_resolution, series_resolution, shell_resolution})
    if (r.radial <= 0 || r.angular <= 0) throw UsageError("grid resolutions must be positive");
  if (precision_bits < 128) throw UsageError("precision cap must be at least 128 bits");
  if (invariance_samples == 0 || fibered_samples == 0 || word_pairs <= 0)
    throw UsageError("sample counts must be positive");
  for (const auto& f : formats)
    if (f != "json" && f != "csv" && f != "svg" && f != "md") throw UsageError("unknown output format: " + f);
}

nlohmann::json RunConfig::to_json() const {
  return {{"n_max", n_max},
          {"jet_order", jet_order},
          {"gated_order", gated_order},
          {"bump_resolution", resolution_json(bump_resolution)},
          {"series_resolution", resolution_json(series_resolution)},
          {"shell_resolution", resolution_json(shell_resolution)},
          {"precision_bits", precision_bits},
          {"seed", seed},
          {"invariance_samples", invariance_samples},
          {"fibered_samples", fibered_samples},
          {"word_pairs", word_pairs},
          {"formats", formats},
          {"cutoff", cutoff_name(cutoff)},
          {"schedule", schedule_name(schedule)}};
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

nlohmann::json Check::to_json() const {
  nlohmann::json j{{"name", name}, {"status", to_string(status)}, {"gating", gating}};
  if (!value.is_null()) j["value"] = value;
  if (!tolerance.is_null()) j["tolerance"] = tolerance;
  if (!detail.is_null()) j["detail"] = detail;
  return j;
}

CheckStatus SuiteResult::status() const {
  bool undecided = false;
  for (const auto& c : checks) {
    if (!c.gating) continue;
    if (c.status == CheckStatus::fail) return CheckStatus::fail;
    if (c.status == CheckStatus::indeterminate) undecided = true;
  }
  return undecided ? CheckStatus::indeterminate : CheckStatus::pass;
}

nlohmann::json SuiteResult::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  nlohmann::json j{{"status", to_string(status())}, {"checks", arr}};
  if (!data.is_null()) j["data"] = data;
  return j;
}

SuiteResult run_geometry(const RunConfig& config) {
  SuiteResult out{"geometry", {}, nullptr};
  const int hi = config.n_max;

  int pairs = 0, failures = 0;
  nlohmann::json first_failure;
  for (int n = kMinLevel; n <= hi; ++n) {
    for (int m = kMinLevel; m <= hi; ++m) {
      if (n == m) continue;
      ++pairs;
      const auto c = annuli_disjoint(n, m);
      if (!c.disjoint) {
        if (failures++ == 0) first_failure = {n, m};
      }
    }
  }
  out.checks.push_back(make_check("annuli_disjoint", failures == 0, {{"pairs", pairs}, {"failures", failures}}, 0,
                                  first_failure));

  auto contained = nlohmann::json::array();
  bool all_contained = true;
  for (int n = kMinLevel; n <= hi; ++n) {
    const auto c = disk_in_annulus(n, 1);
    all_contained = all_contained && c.contained;
    contained.push_back({{"n", n}, {"contained", c.contained}, {"inner_tight", c.inner_tight},
                         {"outer_tight", c.outer_tight}});
  }
  out.checks.push_back(make_check("disk_in_annulus", all_contained, {{"levels", hi - kMinLevel + 1}}, 0, contained));

  auto gaps = nlohmann::json::array();
  bool gaps_ok = true;
  for (int n = kMinLevel; n <= hi; ++n) {
    const auto g = adjacent_gap(n);
    if (n <= 30) gaps_ok = gaps_ok && g.certified_positive;
    gaps.push_back({{"n", n}, {"certified_positive", g.certified_positive}, {"lower", g.lower.get_d()},
                    {"approx", g.approx}});
  }
  out.checks.push_back(make_check("adjacent_gap_positive", gaps_ok, {{"levels_gated", std::min(hi, 30) - 3}}, 0,
                                  gaps));

  bool twist_ok = true;
  auto twist = nlohmann::json::array();
  for (int n = kMinLevel; n <= hi; ++n) {
    const auto t = twist_certificate(n, hi, config.schedule);
    const bool ok = t.disks_in_plateau && t.support_in_f && t.support_avoids_other_e;
    twist_ok = twist_ok && ok;
    if (!ok)
      twist.push_back({{"n", n}, {"disks_in_plateau", t.disks_in_plateau}, {"support_in_f", t.support_in_f},
                       {"support_avoids_other_e", t.support_avoids_other_e}});
  }
  out.checks.push_back(make_check("twist_certificate", twist_ok, {{"levels", hi - kMinLevel + 1}}, 0, twist));

  bool supports_ok = true;
  for (int n = kMinLevel; n <= hi; ++n)
    for (int m = n + 1; m <= hi; ++m) supports_ok = supports_ok && twist_supports_disjoint(n, m, config.schedule);
  out.checks.push_back(make_check("twist_supports_disjoint", supports_ok));

  out.data = {{"gaps", gaps}};
  return out;
}

SuiteResult run_norms(const RunConfig& config) {
  SuiteResult out{"norms", {}, nullptr};
  const Arrangement arr = make_arrangement(config);
  const RotationFamily family = make_family(config);
  const int k_max = config.jet_order;

  // sup u = 1/24 at the plateau of disk (4, 16), centered at (1/4, 0)
  {
    const FieldSpec u{"u", [&](Point x, int order) { return std::vector<RealJet>{arr.u_jet(x, order)}; }};
    const auto r = ck_norm_estimate(u, 0, disk_grid(disk_center(4, 16), disk_radius_double(4), {16, 16}));
    const double exact = 1.0 / 24.0;
    out.checks.push_back(make_check("u_sup", std::abs(r.value() - exact) <= 1e-6, r.value(), 1e-6,
                                    {{"exact", "1/24"}}));
  }

  std::vector<double> deltas;
  for (int i = 0; i <= 7; ++i) deltas.push_back(std::ldexp(1.0, -i));
  const auto bump = lemma_bivector_fit(k_max, deltas, Cutoff(config.cutoff), config.bump_resolution);
  add_fit_checks(out, "bump", bump, config.gated_order);

  const auto series = series_fit(arr, k_max, kMinLevel, clamp_hi(config.n_max, 12), config.series_resolution);
  add_fit_checks(out, "series", series, config.gated_order);

  const int twist_hi = clamp_hi(config.n_max, 20);
  const auto twist = phi_deviation_fit(family, k_max, kMinLevel, twist_hi, config.shell_resolution);
  add_fit_checks(out, "phi_minus_id", twist.phi, config.gated_order);
  add_fit_checks(out, "f_n", twist.f, config.gated_order);
  add_fit_checks(out, "exp_f_minus_1", twist.expf, config.gated_order);
  out.checks.push_back(make_check("phi_c0_bound", twist.c0_bound_holds, nullptr, "2 pi / 2^n"));

  // strictly decreasing sampled ||phi_n - id||_k for n >= 6
  for (int k = 0; k <= k_max; ++k) {
    bool decreasing = true;
    nlohmann::json first_violation;
    for (std::size_t i = 1; i < twist.levels.size(); ++i) {
      if (twist.levels[i - 1] < 6) continue;
      const double prev = twist.phi.reports[i - 1].sup(k);
      const double cur = twist.phi.reports[i].sup(k);
      if (!(cur < prev) && decreasing) {
        decreasing = false;
        first_violation = {{"n", twist.levels[i]}, {"previous", prev}, {"current", cur}};
      }
    }
    Check c = make_check("phi_monotone.k" + std::to_string(k), decreasing, nullptr, nullptr, first_violation);
    c.gating = k <= config.gated_order;
    out.checks.push_back(std::move(c));
  }

  // series tails: positive, finite and strictly decreasing in N
  auto tails = nlohmann::json::array();
  bool tails_ok = true;
  for (int k = 0; k <= k_max; ++k) {
    double prev = std::numeric_limits<double>::infinity();
    for (int N = kMinLevel; N <= 40; ++N) {
      const double t = series_tail(k, N);
      tails_ok = tails_ok && std::isfinite(t) && t > 0 && t < prev;
      prev = t;
      if (N == kMinLevel || N % 10 == 0) tails.push_back({{"k", k}, {"N", N}, {"tail", t}});
    }
  }
  const double e_tail = series_tail(0, 4);
  out.checks.push_back(make_check("series_tail", tails_ok && std::abs(e_tail - (std::exp(1.0) - 65.0 / 24.0)) < 1e-15,
                                  e_tail, 1e-15, tails));

  // tail_epsilon_index is non-decreasing as epsilon halves
  bool index_monotone = true;
  auto indices = nlohmann::json::array();
  for (int k = 0; k <= config.gated_order; ++k) {
    const double c_k = twist.phi.fits.at(k).fine.fitted_c;
    int prev = kMinLevel;
    for (int j = 0; j <= 40; ++j) {
      const int idx = tail_epsilon_index(k, std::ldexp(1.0, -j), c_k);
      index_monotone = index_monotone && idx >= prev;
      prev = idx;
      if (j % 10 == 0) indices.push_back({{"k", k}, {"eps", std::ldexp(1.0, -j)}, {"n_eps", idx}});
    }
  }
  out.checks.push_back(make_check("tail_epsilon_monotone", index_monotone, nullptr, nullptr, indices));

  auto fits = nlohmann::json::array();
  for (const auto& r : {fit_rows("bump", bump), fit_rows("series", series), fit_rows("phi_minus_id", twist.phi),
                        fit_rows("f_n", twist.f), fit_rows("exp_f_minus_1", twist.expf)})
    for (const auto& row : r) fits.push_back(row);
  out.data = {{"fit_columns", {"family", "k", "level", "parameter", "measured", "shape", "ratio"}},
              {"fits", fits},
              {"fitted_constants", nlohmann::json::object()}};
  for (const auto& [name, r] : std::vector<std::pair<std::string, const FitResult*>>{
           {"bump", &bump}, {"series", &series}, {"phi_minus_id", &twist.phi}, {"f_n", &twist.f},
           {"exp_f_minus_1", &twist.expf}}) {
    auto cs = nlohmann::json::array();
    for (const auto& p : r->fits) cs.push_back(p.fine.fitted_c);
    out.data["fitted_constants"][name] = cs;
  }
  return out;
}

SuiteResult run_invariance(const RunConfig& config) {
  SuiteResult out{"invariance", {}, nullptr};
  const Arrangement arr = make_arrangement(config);
  const RotationFamily family = make_family(config);
  auto per_level = nlohmann::json::array();
  for (int n = kMinLevel; n <= clamp_hi(config.n_max, 12); ++n) {
    const auto samples = stratified_samples(n, config.invariance_samples, config.seed, config.schedule);
    double worst = 0.0;
    Point worst_at{};
    try {
      for (const auto& x : samples) {
        const double r = family.invariance_residual(arr, n, x);
        if (!(r <= worst)) {
          worst = r;
          worst_at = x;
        }
      }
    } catch (const IndeterminateError& e) {
      out.checks.push_back(indeterminate_check("invariance.n" + std::to_string(n), e.what()));
      continue;
    }
    out.checks.push_back(make_check("invariance.n" + std::to_string(n), worst <= 1e-9, worst, 1e-9,
                                    {{"samples", samples.size()}, {"worst_at", {worst_at.x, worst_at.y}}}));
    per_level.push_back({{"n", n}, {"max_residual", worst}});
  }
  out.data = {{"residuals", per_level}};
  return out;
}

SuiteResult run_obstruction(const RunConfig& config) {
  SuiteResult out{"obstruction", {}, nullptr};
  const Arrangement arr = make_arrangement(config);
  const RotationFamily family = make_family(config);
  auto witnesses = nlohmann::json::array();

  for (int n = kMinLevel; n <= std::min(6, config.n_max); ++n) {
    const double h = adjacent_gap(n).approx / 10.0;
    const Point a = disk_center(n, 1), b = disk_center(n, 2);
    const Point mid = 0.5 * (a + b);
    const double delta = disk_radius_double(n);
    const double mid_r = norm(mid);
    const Point out_dir = (1.0 / mid_r) * mid;
    const std::vector<std::pair<std::string, std::vector<Point>>> paths{
        {"segment", segment_path(a, b, h)},
        {"arc", arc_path(n, h, true)},
        {"arc_long_way", arc_path(n, h, false)},
        {"bulge_out", polyline_path({a, mid + (3 * delta) * out_dir, b}, h)},
        {"bulge_in", polyline_path({a, mid - (3 * delta) * out_dir, b}, h)},
        {"through_origin", polyline_path({a, {0.0, 0.0}, b}, h)},
        {"jitter", jitter_path(n, h, config.seed)},
    };
    for (const auto& [name, path] : paths) {
      const auto cert = path_obstruction_check(arr, n, path, h);
      const bool ok = cert.verdict == PathVerdict::leaves_rank_two;
      out.checks.push_back(make_check("path." + name + ".n" + std::to_string(n), ok, to_string(cert.verdict),
                                      nullptr, cert.to_json()));
      witnesses.push_back({{"n", n}, {"path", name}, {"certificate", cert.to_json()}});
    }

    // Soundness: no confinement claim for a path that leaves the disk.
    const double gap = adjacent_gap(n).approx;
    const std::vector<std::tuple<std::string, std::vector<Point>, double>> adversarial{
        {"jump", {a, b}, distance(a, b)},
        {"coarse_segment", segment_path(a, b, 2 * gap), 2 * gap},
        {"overlong_step", segment_path(a, b, 3 * h), h},
        {"grazing_exit", polyline_path({a, a + Point{1.05 * delta, 0.0}, a}, h), h},
        {"constant", {a, a, a}, h},
        {"inside_circle", polyline_path({a, a + Point{0.5 * delta, 0.0}, a + Point{0.0, 0.5 * delta}, a}, h), h},
    };
    bool sound = true;
    auto adv = nlohmann::json::array();
    for (const auto& [name, path, step] : adversarial) {
      const auto cert = path_obstruction_check(arr, n, path, step);
      const bool exits = exits_start_disk(n, path);
      if (exits && cert.verdict == PathVerdict::confined) sound = false;
      // paths that stay inside are the positive controls
      if (!exits && cert.verdict != PathVerdict::confined) sound = false;
      adv.push_back({{"path", name}, {"exits", exits}, {"verdict", to_string(cert.verdict)}});
    }
    out.checks.push_back(make_check("path_soundness.n" + std::to_string(n), sound, nullptr, nullptr, adv));
  }

  // distinct component witnesses for random word pairs over 4..12
  std::mt19937_64 rng(config.seed);
  std::bernoulli_distribution bit(0.5);
  const int word_hi = clamp_hi(config.n_max, 12);
  const int word_len = word_hi - kMinLevel + 1;
  auto random_word = [&] {
    std::vector<std::uint8_t> bits(word_len);
    for (auto& v : bits) v = bit(rng) ? 1 : 0;
    return BitWord(kMinLevel, bits);
  };
  int succeeded = 0;
  nlohmann::json first_failure;
  auto sample_witnesses = nlohmann::json::array();
  for (int i = 0; i < config.word_pairs; ++i) {
    const BitWord w1 = random_word();
    BitWord w2 = random_word();
    while (w2 == w1) w2 = random_word();
    const auto w = distinct_component_witness(family, arr, w1, w2);
    if (w.succeeded)
      ++succeeded;
    else if (first_failure.is_null())
      first_failure = {{"w1", w1.to_string()}, {"w2", w2.to_string()}, {"witness", w.to_json()}};
    if (i < 5) sample_witnesses.push_back({{"w1", w1.to_string()}, {"w2", w2.to_string()}, {"witness", w.to_json()}});
  }
  out.checks.push_back(make_check("distinct_components", succeeded == config.word_pairs,
                                  {{"pairs", config.word_pairs}, {"succeeded", succeeded}}, nullptr,
                                  first_failure.is_null() ? sample_witnesses : first_failure));

  // composed and summed word deviations agree
  std::mt19937_64 word_rng(config.seed + 1);
  double worst_gap = 0.0, worst_pointwise = 0.0;
  bool triangle = true;
  auto words = nlohmann::json::array();
  for (int i = 0; i < 6; ++i) {
    std::vector<std::uint8_t> bits(word_len);
    for (auto& v : bits) v = std::bernoulli_distribution(0.5)(word_rng) ? 1 : 0;
    bits[i % word_len] = 1;
    const BitWord w(kMinLevel, bits);
    for (int k = 0; k <= config.gated_order; ++k) {
      const auto r = word_deviation_norm(family, w, k, 0.0, {16, 64});
      worst_gap = std::max(worst_gap, std::abs(r.composed_norm - r.summed_norm));
      worst_pointwise = std::max(worst_pointwise, r.pointwise_discrepancy);
      triangle = triangle && r.composed_norm <= r.factor_norm_sum + 1e-12 &&
                 std::abs(r.composed_norm - r.max_factor_norm) <= 1e-9;
      words.push_back(r.to_json());
    }
  }
  out.checks.push_back(make_check("word_deviation_sum", worst_gap <= 1e-9 && worst_pointwise <= 1e-9 && triangle,
                                  {{"norm_gap", worst_gap}, {"pointwise", worst_pointwise}}, 1e-9, words));

  out.data = {{"witnesses", witnesses}};
  return out;
}

SuiteResult run_fibered(const RunConfig& config) {
  SuiteResult out{"fibered", {}, nullptr};
  const Arrangement arr = make_arrangement(config);
  const RotationFamily family = make_family(config);
  const FiberedStructure fibered(arr, family);

  for (int n = kMinLevel; n <= clamp_hi(config.n_max, 12); ++n) {
    const auto samples = stratified_samples(n, config.fibered_samples, config.seed + 7, config.schedule);
    try {
      const double r = fibered.f_invariance_residual(n, samples);
      out.checks.push_back(make_check("f_invariance.n" + std::to_string(n), r <= 1e-9, r, 1e-9));
    } catch (const IndeterminateError& e) {
      out.checks.push_back(indeterminate_check("f_invariance.n" + std::to_string(n), e.what()));
    }
  }

  // r o (psi x id) = psi on modeled Poisson inputs; a rigid rotation is refused
  const auto samples = stratified_samples(kMinLevel, config.fibered_samples, config.seed + 11, config.schedule);
  std::vector<BaseMap> modeled{base_map::Identity{}};
  for (int n = kMinLevel; n <= clamp_hi(config.n_max, 12); ++n) modeled.push_back(base_map::Twist{n});
  modeled.push_back(base_map::Word{BitWord::parse("4:1011")});
  modeled.push_back(base_map::Word{BitWord::parse("5:11001")});
  bool right_inverse = true;
  std::string failure;
  for (const auto& psi : modeled) {
    try {
      right_inverse = right_inverse && same_base_map(fibered.r_project(product_with_identity(psi), samples), psi);
    } catch (const InvariantViolation& e) {
      right_inverse = false;
      failure = e.what();
    }
  }
  out.checks.push_back(make_check("r_project_right_inverse", right_inverse, static_cast<int>(modeled.size()), 0,
                                  failure.empty() ? nlohmann::json(nullptr) : nlohmann::json(failure)));

  bool refused = false;
  try {
    fibered.r_project(product_with_identity(base_map::Rotation{0.1}), samples);
  } catch (const InvariantViolation&) {
    refused = true;
  }
  out.checks.push_back(make_check("r_project_rejects_rotation", refused));

  auto perm = nlohmann::json::array();
  bool perm_ok = true;
  for (int n = kMinLevel; n <= std::min(8, config.n_max); ++n) {
    const auto w = component_permutation_witness(fibered, arr, base_map::Twist{n}, n);
    const bool ok = w.moved && w.interior_mapped_onto && w.to_s == 2;
    perm_ok = perm_ok && ok;
    perm.push_back({{"n", n}, {"from_s", w.from_s}, {"to_s", w.to_s}, {"moved", w.moved},
                    {"interior_samples", w.interior_samples}, {"interior_mapped_onto", w.interior_mapped_onto}});
  }
  out.checks.push_back(make_check("component_permutation", perm_ok, nullptr, nullptr, perm));
  return out;
}

std::vector<SuiteResult> run_suite(const std::string& suite, const RunConfig& config) {
  config.validate();
  using Runner = SuiteResult (*)(const RunConfig&);
  const std::vector<std::pair<std::string, Runner>> runners{{"geometry", run_geometry},
                                                            {"norms", run_norms},
                                                            {"invariance", run_invariance},
                                                            {"obstruction", run_obstruction},
                                                            {"fibered", run_fibered}};
  std::vector<SuiteResult> results;
  for (const auto& [name, run] : runners)
    if (suite == "all" || suite == name) results.push_back(run(config));
  if (results.empty()) throw UsageError("unknown suite: " + suite);
  return results;
}

CheckStatus overall_status(const std::vector<SuiteResult>& results) {
  bool undecided = false;
  for (const auto& r : results) {
    const auto s = r.status();
    if (s == CheckStatus::fail) return CheckStatus::fail;
    if (s == CheckStatus::indeterminate) undecided = true;
  }
  return undecided ? CheckStatus::indeterminate : CheckStatus::pass;
}

nlohmann::json make_report(const RunConfig& config, const std::vector<SuiteResult>& results) {
  nlohmann::json suites = nlohmann::json::object();
  for (const auto& r : results) suites[r.name] = r.to_json();
  return {{"schema_version", kSchemaVersion},
          {"tool", "pdlab"},
          {"config", config.to_json()},
          {"status", to_string(overall_status(results))},
          {"suites", suites}};
}

int exit_code(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return 0;
    case CheckStatus::fail: return 1;
    case CheckStatus::indeterminate: return 2;
  }
  return 1;
}

}  // namespace pdlab::verify
