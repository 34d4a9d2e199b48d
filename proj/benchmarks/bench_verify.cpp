#include <benchmark/benchmark.h>

#include "pdlab/geometry.hpp"
#include "pdlab/verify/fits.hpp"
#include "pdlab/verify/obstruction.hpp"

using namespace pdlab;
using namespace pdlab::verify;

static void BM_AnnuliDisjoint(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 4; n <= 50; ++n)
      for (int m = n + 1; m <= 50; ++m) benchmark::DoNotOptimize(annuli_disjoint(n, m));
}
BENCHMARK(BM_AnnuliDisjoint)->Unit(benchmark::kMillisecond);

static void BM_AdjacentGap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adjacent_gap(n));
}
BENCHMARK(BM_AdjacentGap)->Arg(4)->Arg(30)->Arg(60);

static void BM_PathCheck(benchmark::State& state) {
  const Arrangement arr;
  const int n = static_cast<int>(state.range(0));
  const double h = adjacent_gap(n).approx / 10;
  const auto path = segment_path(disk_center(n, 1), disk_center(n, 2), h);
  for (auto _ : state) benchmark::DoNotOptimize(path_obstruction_check(arr, n, path, h));
}
BENCHMARK(BM_PathCheck)->Arg(4)->Arg(6);

static void BM_TwistFitLevel(benchmark::State& state) {
  const RotationFamily fam;
  for (auto _ : state) benchmark::DoNotOptimize(phi_deviation_fit(fam, 2, 8, 8, {32, 64}));
}
BENCHMARK(BM_TwistFitLevel)->Unit(benchmark::kMillisecond);
