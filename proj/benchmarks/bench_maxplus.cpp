#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "knapsack/maxplus.hpp"
#include "knapsack/smawk.hpp"

namespace {

using namespace knapsack;

ProfitSeq random_seq(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  ProfitSeq x(len);
  for (auto& v : x) v = dist(rng);
  return x;
}

ConcaveSeq random_concave(std::mt19937_64& rng, std::size_t h, std::size_t count) {
  std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
  std::vector<std::int64_t> diffs(count);
  for (auto& d : diffs) d = dist(rng);
  std::sort(diffs.rbegin(), diffs.rend());
  ConcaveSeq y;
  y.offset = h;
  y.count = count;
  y.seq.assign(count * h + 1, kNegInf);
  std::int64_t acc = 0;
  y.seq[0] = acc;
  for (std::size_t i = 1; i <= count; ++i) y.seq[i * h] = acc += diffs[i - 1];
  return y;
}

// range(0): sequence length, range(1): offset h.
void BM_ConvConcave(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto h = static_cast<std::size_t>(state.range(1));
  const ProfitSeq x = random_seq(rng, len);
  const ConcaveSeq y = random_concave(rng, h, (len - 1) / h);
  for (auto _ : state) benchmark::DoNotOptimize(conv_concave(x, y, len));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(len));
}
BENCHMARK(BM_ConvConcave)->ArgsProduct({{1 << 12, 1 << 16, 1 << 20}, {1, 17, 500}});

void BM_ConvNaive(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto len = static_cast<std::size_t>(state.range(0));
  const ProfitSeq x = random_seq(rng, len);
  const ConcaveSeq y = random_concave(rng, 1, len - 1);
  for (auto _ : state) benchmark::DoNotOptimize(conv_naive(x, y.seq));
}
BENCHMARK(BM_ConvNaive)->Arg(1 << 8)->Arg(1 << 10)->Arg(1 << 12);

void BM_RowMaxima(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ImplicitMatrix m{n, n, [](std::size_t i, std::size_t j) {
                     const auto d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
                     return ExtProfit(-d * d + static_cast<std::int64_t>(j));
                   }};
  for (auto _ : state) benchmark::DoNotOptimize(row_maxima(m));
  state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_RowMaxima)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN);

}  // namespace
