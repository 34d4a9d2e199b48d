#include "pdlab/verify/obstruction.hpp"

#include <cmath>

#include "pdlab/verify/fits.hpp"
#include "pdlab/verify/norms.hpp"

namespace pdlab::verify {

std::string to_string(PathVerdict verdict) {
  switch (verdict) {
    case PathVerdict::confined: return "confined";
    case PathVerdict::leaves_rank_two: return "leaves_rank_two";
    case PathVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

nlohmann::json location_json(const SupportLocation& loc) {
  return std::visit(
      [](const auto& l) -> nlohmann::json {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, location::InDisk>)
          return {{"kind", "in_disk"},
                  {"n", l.n},
                  {"s", l.s},
                  {"on_boundary", l.on_boundary},
                  {"scaled_distance", l.scaled_distance}};
        else if constexpr (std::is_same_v<L, location::Indeterminate>)
          return {{"kind", "indeterminate"}, {"n", l.n}, {"s", l.s}};
        else if constexpr (std::is_same_v<L, location::OriginRegion>)
          return {{"kind", "origin"}};
        else
          return {{"kind", "outside"}};
      },
      loc);
}

nlohmann::json PathCertificate::to_json(bool include_path) const {
  nlohmann::json j{{"n", n},
                   {"h", h},
                   {"points", path.size()},
                   {"verdict", to_string(verdict)},
                   {"gap_lower", pdlab::to_string(gap_lower)},
                   {"gap_lower_approx", gap_lower.get_d()},
                   {"reason", reason}};
  if (witness_index) {
    j["witness_index"] = *witness_index;
    j["witness"] = {path[*witness_index].x, path[*witness_index].y};
  }
  if (include_path) {
    auto pts = nlohmann::json::array();
    for (const auto& p : path) pts.push_back({p.x, p.y});
    j["path"] = pts;
  }
  return j;
}

std::vector<Point> segment_path(Point a, Point b, double h) {
  if (!(h > 0.0)) throw UsageError("step must be positive");
  const double len = distance(a, b);
  // slightly more steps than needed so rounding cannot push a step above h
  const auto steps = static_cast<std::size_t>(std::ceil(len / h * (1.0 + 1e-12)));
  std::vector<Point> out{a};
  for (std::size_t i = 1; i < steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps);
    out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
  }
  if (steps > 0) out.push_back(b);
  return out;
}

PathCertificate path_obstruction_check(const Arrangement& arrangement, int n, const std::vector<Point>& path,
                                       double h) {
  check_level(n);
  if (path.empty()) throw UsageError("empty path");
  if (!(h > 0.0)) throw UsageError("step must be positive");
  const Point start = disk_center(n, 1);
  if (path.front().x != start.x || path.front().y != start.y) throw UsageError("path must start at p(n,1)");

  PathCertificate cert;
  cert.n = n;
  cert.path = path;
  cert.h = h;
  cert.gap_lower = adjacent_gap(n).lower;

  bool steps_ok = true;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!(distance(path[i - 1], path[i]) <= h)) steps_ok = false;

  bool all_in_start_disk = true;
  bool undecided = false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto loc = arrangement.locate(path[i]);
    if (std::holds_alternative<location::Outside>(loc)) {
      // u vanishes on a neighborhood of this point, while u(p(n,1)) > 0.
      cert.verdict = PathVerdict::leaves_rank_two;
      cert.witness_index = i;
      cert.reason = "point outside the support";
      return cert;
    }
    const auto* disk = std::get_if<location::InDisk>(&loc);
    if (std::holds_alternative<location::Indeterminate>(loc)) undecided = true;
    if (!disk || disk->n != n || disk->s != 1) all_in_start_disk = false;
  }

  if (!steps_ok) {
    cert.reason = "a step exceeds h";
  } else if (undecided) {
    cert.reason = "a location predicate was indeterminate";
  } else if (!all_in_start_disk) {
    cert.reason = "path visits other disks without a certified exit point";
  } else if (Rational(h) >= cert.gap_lower) {
    cert.reason = "h is not below the certified gap";
  } else {
    cert.verdict = PathVerdict::confined;
    cert.reason = "every point lies in the closed disk (n,1)";
  }
  return cert;
}

nlohmann::json ComponentSeparation::to_json() const {
  return {{"n", n},
          {"moving_word", moving_word},
          {"start", {start.x, start.y}},
          {"moved_image", {moved_image.x, moved_image.y}},
          {"fixed_image", {fixed_image.x, fixed_image.y}},
          {"moved_location", location_json(moved_location)},
          {"moved_offset", moved_offset},
          {"fixed_exactly", fixed_exactly},
          {"gap_lower_approx", gap_lower.get_d()},
          {"succeeded", succeeded}};
}

ComponentSeparation distinct_component_witness(const RotationFamily& family, const Arrangement& arrangement,
                                               const BitWord& w1, const BitWord& w2) {
  const int lo = std::min(w1.start(), w2.start());
  const int hi = std::max(w1.end(), w2.end());
  int n = 0;
  for (int m = lo; m < hi; ++m) {
    if (w1.active(m) != w2.active(m)) {
      n = m;
      break;
    }
  }
  if (n == 0) throw UsageError("words define the same map");

  const BitWord& mover = w1.active(n) ? w1 : w2;
  const BitWord& keeper = w1.active(n) ? w2 : w1;
  ComponentSeparation out;
  out.n = n;
  out.moving_word = w1.active(n) ? 1 : 2;
  out.start = disk_center(n, 1);
  out.moved_image = family.word_eval(mover, out.start);
  out.fixed_image = family.word_eval(keeper, out.start);
  out.moved_location = arrangement.locate(out.moved_image);
  out.moved_offset = distance(out.moved_image, disk_center(n, 2));
  out.fixed_exactly = out.fixed_image.x == out.start.x && out.fixed_image.y == out.start.y;
  out.gap_lower = adjacent_gap(n).lower;
  const auto* disk = std::get_if<location::InDisk>(&out.moved_location);
  out.succeeded = out.fixed_exactly && disk && disk->n == n && disk->s == 2 && !disk->on_boundary &&
                  disk->scaled_distance < 1e-6;
  return out;
}

nlohmann::json WordDeviationReport::to_json() const {
  return {{"word", word},
          {"k", k},
          {"composed_norm", composed_norm},
          {"summed_norm", summed_norm},
          {"max_factor_norm", max_factor_norm},
          {"factor_norm_sum", factor_norm_sum},
          {"pointwise_discrepancy", pointwise_discrepancy},
          {"tail_bound", tail_bound},
          {"samples", samples}};
}

WordDeviationReport word_deviation_norm(const RotationFamily& family, const BitWord& word, int k, double c_k,
                                        Resolution res) {
  WordDeviationReport out;
  out.word = word.to_string();
  out.k = k;
  const auto levels = word.active_levels();
  if (levels.empty()) return out;

  Grid grid;
  for (int n : levels) {
    const TwistBands b = twist_bands(n, family.schedule());
    grid.add(PolarPatch{{0.0, 0.0}, b.support_inner.get_d(), b.support_outer.get_d(), res.radial, res.angular});
  }
  out.samples = grid.size();

  const FieldBundle bundle = [&](Point x, int order) {
    const ComplexJet composed = family.word_deviation_jet(word, x, order);
    const ComplexJet summed = family.word_deviation_sum_jet(word, x, order);
    return std::vector<std::vector<RealJet>>{components(composed), components(summed),
                                             components(composed - summed)};
  };
  const auto reports = ck_norm_estimate_many({"composed", "summed", "difference"}, bundle, k, grid, 1);
  out.composed_norm = reports[0].value();
  out.summed_norm = reports[1].value();
  out.pointwise_discrepancy = reports[2].value();

  for (int n : levels) {
    const FieldSpec factor{"phi_minus_id",
                           [&](Point x, int order) { return components(family.phi_deviation_jet(n, x, order)); }};
    const double v = ck_norm_estimate(factor, k, grid, 1).value();
    out.max_factor_norm = std::max(out.max_factor_norm, v);
    out.factor_norm_sum += v;
  }
  out.tail_bound = c_k * twist_tail(k, levels.front());
  return out;
}

}  // namespace pdlab::verify
