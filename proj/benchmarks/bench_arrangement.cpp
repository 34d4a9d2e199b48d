#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pdlab/arrangement.hpp"
#include "pdlab/diffeo.hpp"

using namespace pdlab;

namespace {

std::vector<Point> random_points(std::size_t count, double r_max) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> r(0.0, r_max), a(0.0, 2 * M_PI);
  std::vector<Point> out(count);
  for (auto& p : out) {
    const double rr = r(rng), aa = a(rng);
    p = {rr * std::cos(aa), rr * std::sin(aa)};
  }
  return out;
}

}  // namespace

static void BM_Locate(benchmark::State& state) {
  const Arrangement arr;
  const auto pts = random_points(4096, 0.3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(arr.locate(pts[i++ & 4095]));
}
BENCHMARK(BM_Locate);

static void BM_UEval(benchmark::State& state) {
  const Arrangement arr;
  const auto pts = random_points(4096, 0.3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(arr.u_eval(pts[i++ & 4095]));
}
BENCHMARK(BM_UEval);

static void BM_UJetInDisk(benchmark::State& state) {
  const Arrangement arr;
  const Point c = disk_center(6, 5);
  const Point x{c.x + 0.7 * disk_radius_double(6), c.y};
  for (auto _ : state) benchmark::DoNotOptimize(arr.u_jet(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_UJetInDisk)->Arg(0)->Arg(2)->Arg(4);

static void BM_InvarianceResidual(benchmark::State& state) {
  const Arrangement arr;
  const RotationFamily fam;
  const int n = static_cast<int>(state.range(0));
  const auto pts = random_points(4096, 0.3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fam.invariance_residual(arr, n, pts[i++ & 4095]));
}
BENCHMARK(BM_InvarianceResidual)->Arg(4)->Arg(12);
