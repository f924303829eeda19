#include <benchmark/benchmark.h>

#include "truncvar/truncvar.hpp"

using namespace truncvar;

namespace {

SampledPath walk(std::size_t n) {
  return generate({.kind = GeneratorKind::RandomWalk, .length = n, .seed = 7});
}

void BM_TruncatedVariation(benchmark::State& state) {
  const auto path = walk(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_variation(path, Level(1.0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TruncatedVariation)
    ->RangeMultiplier(10)
    ->Range(100'000, 10'000'000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_Oracle(benchmark::State& state) {
  const auto path = walk(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_truncated_variation(path, Level(1.0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Oracle)->RangeMultiplier(2)->Range(128, 2048)->Complexity(benchmark::oNSquared);

void BM_LazyApproximation(benchmark::State& state) {
  const auto path = walk(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lazy_approximation(path, Level(1.0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LazyApproximation)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const auto path = walk(100'000);
  const auto levels = level_grid(0.25, 16.0, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(path, levels, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
