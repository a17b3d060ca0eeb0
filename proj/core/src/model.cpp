#include "knapsack/model.hpp"

#include <string>

namespace knapsack {
namespace {

void validate_common(std::int64_t weight, Int128 profit, std::size_t index) {
  if (weight < 1 || weight > kMaxWeight) {
    throw ValidationError("item " + std::to_string(index) + ": weight " + std::to_string(weight) +
                          " outside [1, 2^31-1]");
  }
  if (profit < 1 || profit > kMaxProfit) {
    throw ValidationError("item " + std::to_string(index) + ": profit " + to_string(profit) +
                          " outside [1, 2^95]");
  }
}

void validate_capacity(std::int64_t capacity) {
  if (capacity < 0 || capacity > kMaxCapacity) {
    throw ValidationError("capacity " + std::to_string(capacity) + " outside [0, 2^62]");
  }
}

}  // namespace

void validate(const Instance01& instance) {
  validate_capacity(instance.capacity);
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    validate_common(instance.items[i].weight, instance.items[i].profit, i);
  }
}

void validate(const BoundedInstance& instance) {
  validate_capacity(instance.capacity);
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const auto& it = instance.items[i];
    validate_common(it.weight, it.profit, i);
    if (it.multiplicity < 1 || it.multiplicity > kMaxMultiplicity) {
      throw ValidationError("item " + std::to_string(i) + ": multiplicity " +
                            std::to_string(it.multiplicity) + " outside [1, 2^62]");
    }
  }
}

Instance01 canonical_sort(Instance01 instance) {
  validate(instance);
  std::stable_sort(instance.items.begin(), instance.items.end(),
                   [](const Item01& a, const Item01& b) { return ratio_greater(a, b); });
  return instance;
}

BoundedInstance canonical_sort(BoundedInstance instance) {
  validate(instance);
  std::stable_sort(instance.items.begin(), instance.items.end(),
                   [](const BoundedItem& a, const BoundedItem& b) { return ratio_greater(a, b); });
  return instance;
}

Int128 total_weight(const Instance01& instance) {
  Int128 s = 0;
  for (const auto& it : instance.items) s = checked_add(s, it.weight);
  return s;
}

Int128 total_profit(const Instance01& instance) {
  Int128 s = 0;
  for (const auto& it : instance.items) s = checked_add(s, it.profit);
  return s;
}

Int128 total_weight(const BoundedInstance& instance) {
  Int128 s = 0;
  for (const auto& it : instance.items) s = checked_add(s, checked_mul(it.weight, it.multiplicity));
  return s;
}

Int128 total_profit(const BoundedInstance& instance) {
  Int128 s = 0;
  for (const auto& it : instance.items) s = checked_add(s, checked_mul(it.profit, it.multiplicity));
  return s;
}

PrefixSolution maximal_prefix_01(const Instance01& instance) {
  PrefixSolution g;
  const auto& items = instance.items;
  while (g.cut < items.size() && g.total_weight + items[g.cut].weight <= instance.capacity) {
    g.total_weight += items[g.cut].weight;
    g.total_profit = checked_add(g.total_profit, items[g.cut].profit);
    ++g.cut;
  }
  return g;
}

PrefixSolution maximal_prefix_bounded(const BoundedInstance& instance) {
  PrefixSolution g;
  const auto& items = instance.items;
  // Remaining capacity stays within [0, W], so int64 never overflows; the
  // product u_i * w_i may, hence the 128-bit comparison.
  std::int64_t remaining = instance.capacity;
  while (g.cut < items.size()) {
    const auto& it = items[g.cut];
    const Int128 block = static_cast<Int128>(it.weight) * it.multiplicity;
    if (block > remaining) break;
    remaining -= static_cast<std::int64_t>(block);
    g.total_profit = checked_add(g.total_profit, checked_mul(it.profit, it.multiplicity));
    ++g.cut;
  }
  if (g.cut < items.size()) {
    const auto& it = items[g.cut];
    g.bounded_partial = remaining / it.weight;
    remaining -= g.bounded_partial * it.weight;
    g.total_profit = checked_add(g.total_profit, checked_mul(it.profit, g.bounded_partial));
  }
  g.total_weight = instance.capacity - remaining;
  return g;
}

}  // namespace knapsack
