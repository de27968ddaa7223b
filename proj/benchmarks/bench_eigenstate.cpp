#include <benchmark/benchmark.h>

#include "spintorus/spintorus.hpp"

using namespace spintorus;

static void BM_SovBasisStates(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  const auto labels = enumerate_basis(spec.sites);
  for (auto _ : state) {
    const SovBasis basis(spec);
    for (const auto& idx : labels) benchmark::DoNotOptimize(basis.left_state(idx));
  }
}
BENCHMARK(BM_SovBasisStates)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_ActOnBra(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  const auto labels = enumerate_basis(spec.sites);
  for (auto _ : state) {
    for (const auto& idx : labels) benchmark::DoNotOptimize(act_on_bra(BasisOperator::D23, {0.3, 0.1}, idx, spec));
  }
}
BENCHMARK(BM_ActOnBra)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

static void BM_Reconstruct(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  const auto records = brute_force_spectrum(spec);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(records[k++ % records.size()].lambda_at_theta, 1.0, spec));
}
BENCHMARK(BM_Reconstruct)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_ScalarProductTable(benchmark::State& state) {
  const ChainSpec spec = default_generic_spec(3, static_cast<int>(state.range(0)));
  const auto records = brute_force_spectrum(spec);
  for (auto _ : state) benchmark::DoNotOptimize(scalar_product_table(records[0].lambda_at_theta, 1.0, spec));
}
BENCHMARK(BM_ScalarProductTable)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
