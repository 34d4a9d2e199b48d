#include "pdlab/verify/norms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace pdlab::verify {

namespace {

std::atomic<unsigned> g_threads{0};

// sups[field][index] over a range of points.
using SupTable = std::vector<std::vector<double>>;

SupTable sample_range(const FieldBundle& bundle, std::size_t fields, int k,
                      const std::vector<Point>& pts, std::size_t begin, std::size_t end) {
  const auto indices = multi_indices(k);
  SupTable sups(fields, std::vector<double>(indices.size(), 0.0));
  for (std::size_t p = begin; p < end; ++p) {
    const auto jets = bundle(pts[p], k);
    if (jets.size() != fields) throw UsageError("field bundle returned the wrong number of fields");
    for (std::size_t f = 0; f < fields; ++f) {
      for (const auto& comp : jets[f]) {
        for (std::size_t i = 0; i < indices.size(); ++i) {
          const double v = std::abs(comp[indices[i]]);
          // NaN must not be silently dropped by max.
          if (std::isnan(v)) throw InvariantViolation("NaN in field jet");
          sups[f][i] = std::max(sups[f][i], v);
        }
      }
    }
  }
  return sups;
}

SupTable sample_all(const FieldBundle& bundle, std::size_t fields, int k, const std::vector<Point>& pts) {
  const unsigned workers = std::max(1u, std::min<unsigned>(thread_count(), static_cast<unsigned>(pts.size() / 64 + 1)));
  if (workers == 1) return sample_range(bundle, fields, k, pts, 0, pts.size());

  std::vector<SupTable> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (pts.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::size_t b = std::min(pts.size(), w * chunk);
          const std::size_t e = std::min(pts.size(), b + chunk);
          partial[w] = sample_range(bundle, fields, k, pts, b, e);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  // max is order-independent, so the merge is deterministic.
  SupTable out = partial[0];
  for (unsigned w = 1; w < workers; ++w)
    for (std::size_t f = 0; f < fields; ++f)
      for (std::size_t i = 0; i < out[f].size(); ++i) out[f][i] = std::max(out[f][i], partial[w][f][i]);
  return out;
}

}  // namespace

void set_thread_count(unsigned threads) { g_threads = threads; }

unsigned thread_count() {
  if (const unsigned t = g_threads.load(); t > 0) return t;
  if (const char* env = std::getenv("PDLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double NormReport::sup(int order, int level) const {
  if (level < 0) level = levels() - 1;
  double best = 0.0;
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (indices[i].order() <= order) best = std::max(best, level_sups.at(level)[i]);
  return best;
}

double NormReport::sup_exact_order(int order, int level) const {
  if (level < 0) level = levels() - 1;
  double best = 0.0;
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (indices[i].order() == order) best = std::max(best, level_sups.at(level)[i]);
  return best;
}

nlohmann::json NormReport::to_json() const {
  nlohmann::json per_index = nlohmann::json::array();
  for (std::size_t i = 0; i < indices.size(); ++i)
    per_index.push_back({{"a", {indices[i].a1, indices[i].a2}}, {"sup", level_sups.back()[i]}});
  return {{"field", field},
          {"k", k},
          {"sup", value()},
          {"per_index", per_index},
          {"history", history},
          {"points", level_points},
          {"grid", grid}};
}

std::vector<NormReport> ck_norm_estimate_many(const std::vector<std::string>& ids,
                                              const FieldBundle& bundle, int k, const Grid& grid,
                                              int levels) {
  if (k < 0 || k > kDefaultMaxJetOrder) throw UsageError("norm order out of range");
  if (levels < 1) throw UsageError("need at least one grid level");
  std::vector<NormReport> reports(ids.size());
  for (std::size_t f = 0; f < ids.size(); ++f) {
    reports[f].field = ids[f];
    reports[f].k = k;
    reports[f].grid = grid.describe();
    reports[f].indices = multi_indices(k);
  }
  Grid g = grid;
  for (int level = 0; level < levels; ++level) {
    const auto pts = g.points();
    const auto sups = sample_all(bundle, ids.size(), k, pts);
    for (std::size_t f = 0; f < ids.size(); ++f) {
      auto& r = reports[f];
      r.level_sups.push_back(sups[f]);
      r.history.push_back(r.sup(k, level));
      r.level_points.push_back(pts.size());
    }
    g = g.refined();
  }
  return reports;
}

NormReport ck_norm_estimate(const FieldSpec& field, int k, const Grid& grid, int levels) {
  FieldBundle bundle = [&](Point x, int order) { return std::vector<std::vector<RealJet>>{field.jets(x, order)}; };
  return ck_norm_estimate_many({field.id}, bundle, k, grid, levels).front();
}

std::vector<RealJet> components(const ComplexJet& j) { return {real_part(j), imag_part(j)}; }

}  // namespace pdlab::verify
