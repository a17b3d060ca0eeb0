#include "knapsack/oracles.hpp"

#include <string>
#include <vector>

namespace knapsack {
namespace {

ExtProfit table_dp(const std::vector<Item01>& items, std::int64_t capacity, const OracleBudget& budget,
                   const char* name) {
  const auto row = static_cast<std::uint64_t>(capacity) + 1;
  if (row > budget.max_row || (!items.empty() && row > budget.max_cells / items.size())) {
    throw BudgetExceeded(std::string(name) + ": " + std::to_string(items.size()) + " items x capacity " +
                         std::to_string(capacity) + " exceeds the oracle budget");
  }
  std::vector<Int128> best(row, 0);
  for (const auto& it : items) {
    const auto w = static_cast<std::uint64_t>(it.weight);
    for (std::uint64_t c = row - 1; c >= w && c < row; --c) {
      const Int128 with = checked_add(best[c - w], it.profit);
      if (with > best[c]) best[c] = with;
    }
  }
  return ExtProfit(best[row - 1]);
}

}  // namespace

ExtProfit bellman_01(const Instance01& instance, const OracleBudget& budget) {
  validate(instance);
  return table_dp(instance.items, instance.capacity, budget, "bellman_01");
}

ExtProfit bellman_bounded(const BoundedInstance& instance, const OracleBudget& budget) {
  validate(instance);
  // Chunks 1, 2, 4, ..., remainder represent every count in [0, u].
  // Chunk weights may exceed kMaxWeight, so the split list is not re-validated.
  std::vector<Item01> split;
  for (const auto& it : instance.items) {
    std::int64_t left = it.multiplicity;
    std::int64_t chunk = 1;
    while (left > 0) {
      const std::int64_t take = std::min(chunk, left);
      left -= take;
      const Int128 weight = static_cast<Int128>(it.weight) * take;
      if (weight <= instance.capacity) {
        split.push_back({static_cast<std::int64_t>(weight), checked_mul(it.profit, take)});
      }
      if (left > 0) chunk *= 2;
    }
  }
  return table_dp(split, instance.capacity, budget, "bellman_bounded");
}

ExtProfit brute_force_01(const Instance01& instance, const OracleBudget& budget) {
  validate(instance);
  const std::size_t n = instance.size();
  if (n > budget.max_brute_force_items) {
    throw BudgetExceeded("brute_force_01: " + std::to_string(n) + " items exceed the limit of " +
                         std::to_string(budget.max_brute_force_items));
  }
  Int128 best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Int128 weight = 0;
    Int128 profit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        weight += instance.items[i].weight;
        profit = checked_add(profit, instance.items[i].profit);
      }
    }
    if (weight <= instance.capacity && profit > best) best = profit;
  }
  return ExtProfit(best);
}

}  // namespace knapsack
