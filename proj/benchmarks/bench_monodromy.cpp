#include <benchmark/benchmark.h>

#include "spintorus/spintorus.hpp"

using namespace spintorus;

static void BM_RMatrix(benchmark::State& state) {
  const RParams p{static_cast<int>(state.range(0)), {0.5, 0.0}};
  for (auto _ : state) benchmark::DoNotOptimize(r_matrix({0.3, 0.1}, p));
}
BENCHMARK(BM_RMatrix)->DenseRange(2, 4);

static void BM_Monodromy(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Monodromy::evaluate(spec, {0.3, 0.1}));
}
BENCHMARK(BM_Monodromy)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

static void BM_MonodromyJet(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(MonodromyJet::evaluate(spec, {0.3, 0.1}));
}
BENCHMARK(BM_MonodromyJet)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_Transfer(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transfer({0.3, 0.1}, spec));
}
BENCHMARK(BM_Transfer)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
