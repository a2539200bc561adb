#include <benchmark/benchmark.h>

#include <random>

#include "popuc/measures.hpp"
#include "popuc/opuc.hpp"
#include "popuc/paraorthogonal.hpp"
#include "popuc/trajectory.hpp"

using namespace popuc;

static void BM_Moments(benchmark::State& state) {
  const auto f = WeightFamily::fisher_hartwig(0.75, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(moments(f, 1.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Moments)->Arg(8)->Arg(16)->Arg(32);

static void BM_SzegoLevinson(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = moments(WeightFamily::bernstein_szego(0.6, 0.3), 0.6, n);
  for (auto _ : state) benchmark::DoNotOptimize(szego_levinson(m, n));
}
BENCHMARK(BM_SzegoLevinson)->Arg(8)->Arg(16)->Arg(32);

static void BM_Zeros(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> rad(0.0, 0.9), ang(0.0, kTwoPi);
  std::vector<Complex> a(n - 1);
  for (auto& v : a) v = std::polar(rad(rng), ang(rng));
  const auto p = make_popuc(szego_from_verblunsky(a).monic.back(), std::polar(1.0, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(zeros(p));
}
BENCHMARK(BM_Zeros)->Arg(10)->Arg(25)->Arg(50);

static void BM_Sweep(benchmark::State& state) {
  const auto f = WeightFamily::single_moment(0.05);
  std::vector<double> grid;
  for (int i = 0; i < 91; ++i) grid.push_back(0.05 + 0.01 * i);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(f, grid, 15, ConstantB{Complex{1.0, 0.0}}));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
