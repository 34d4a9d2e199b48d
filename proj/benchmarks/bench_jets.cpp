#include <benchmark/benchmark.h>

#include "pdlab/bump.hpp"
#include "pdlab/diffeo.hpp"

using namespace pdlab;

static void BM_ChiJet(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  double t = 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chi_jet(t, order));
    t = t < 0.95 ? t + 1e-3 : 0.6;
  }
}
BENCHMARK(BM_ChiJet)->DenseRange(0, 4);

static void BM_RadialBumpJet(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Point p{0.2, 0.1};
  const Point x{0.2 + 0.007, 0.1 - 0.003};
  for (auto _ : state) benchmark::DoNotOptimize(radial_bump_jet(x, p, 0.01, order));
}
BENCHMARK(BM_RadialBumpJet)->DenseRange(0, 4);

static void BM_PhiDeviationJet(benchmark::State& state) {
  const RotationFamily fam;
  const int n = static_cast<int>(state.range(0));
  const double r = 1.0 / n + 0.7 / (4.0 * n * n);
  const Point x{r * 0.6, r * 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(fam.phi_deviation_jet(n, x, 4));
}
BENCHMARK(BM_PhiDeviationJet)->Arg(4)->Arg(12)->Arg(20);

static void BM_WordDeviationJet(benchmark::State& state) {
  const RotationFamily fam;
  const auto w = BitWord::parse("4:110101101");
  const Point x{1.0 / 7 + 0.002, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(fam.word_deviation_jet(w, x, 4));
}
BENCHMARK(BM_WordDeviationJet);
