#include <benchmark/benchmark.h>

#include "spintorus/spintorus.hpp"

using namespace spintorus;

static void BM_BruteForceSpectrum(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_spectrum(spec));
}
BENCHMARK(BM_BruteForceSpectrum)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_BaeResiduals(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  const auto seed = bae_seeds(spec, {}).front();
  for (auto _ : state) benchmark::DoNotOptimize(bae_residuals(seed, spec));
}
BENCHMARK(BM_BaeResiduals)->DenseRange(1, 2);

static void BM_NewtonFromSeed(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  const auto seeds = bae_seeds(spec, {});
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(newton_solve(seeds[k++ % seeds.size()], spec));
}
BENCHMARK(BM_NewtonFromSeed)->DenseRange(1, 2)->Unit(benchmark::kMicrosecond);

static void BM_SolveBaeOneSite(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, 1);
  const auto records = brute_force_spectrum(spec);
  BaeOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bae(spec, records, options));
}
BENCHMARK(BM_SolveBaeOneSite)->Unit(benchmark::kMillisecond);
