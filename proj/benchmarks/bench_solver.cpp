#include <benchmark/benchmark.h>

#include "knapsack/knapsack.hpp"

namespace {

using namespace knapsack;

BoundedInstance instance(std::size_t n, std::int64_t w_max, std::int64_t u_max) {
  GenSpec spec;
  spec.seed = 42;
  spec.n = n;
  spec.w_max = w_max;
  spec.p_max = 1000000;
  spec.u_max = u_max;
  spec.fraction = 0.5;
  return generate(spec).instance;
}

// range(0): n, range(1): w_max.
void BM_SolveBounded01(benchmark::State& state) {
  const BoundedInstance in = instance(static_cast<std::size_t>(state.range(0)), state.range(1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(in));
}
BENCHMARK(BM_SolveBounded01)
    ->ArgsProduct({{1000, 100000}, {10, 40, 100}})
    ->Unit(benchmark::kMillisecond);

void BM_SolveBoundedHugeMultiplicity(benchmark::State& state) {
  const BoundedInstance in = instance(1000, state.range(0), 1000000000);
  for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(in));
}
BENCHMARK(BM_SolveBoundedHugeMultiplicity)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Partition(benchmark::State& state) {
  const Instance01 in =
      perturb_profits(canonical_sort(to_01(instance(static_cast<std::size_t>(state.range(0)), 1000, 1)))).instance;
  const PrefixSolution g = maximal_prefix_01(in);
  for (auto _ : state) benchmark::DoNotOptimize(partition(in, g));
}
BENCHMARK(BM_Partition)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Bellman(benchmark::State& state) {
  const Instance01 in = to_01(instance(static_cast<std::size_t>(state.range(0)), state.range(1), 1));
  for (auto _ : state) benchmark::DoNotOptimize(bellman_01(in));
}
BENCHMARK(BM_Bellman)->ArgsProduct({{1000}, {10, 100}})->Unit(benchmark::kMillisecond);

}  // namespace
