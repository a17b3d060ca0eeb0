#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "knapsack/ext_profit.hpp"

namespace knapsack {

// Input limits. Weights fit in 31 bits and profits in 95 bits, so every
// cross-multiplication p_i * w_j used for ratio comparison fits in 127 bits.
inline constexpr std::int64_t kMaxWeight = (std::int64_t{1} << 31) - 1;
inline constexpr Int128 kMaxProfit = static_cast<Int128>(1) << 95;
inline constexpr std::int64_t kMaxCapacity = std::int64_t{1} << 62;
inline constexpr std::int64_t kMaxMultiplicity = std::int64_t{1} << 62;

struct Item01 {
  std::int64_t weight = 1;
  Int128 profit = 1;

  friend bool operator==(const Item01&, const Item01&) = default;
};

struct BoundedItem {
  std::int64_t weight = 1;
  Int128 profit = 1;
  std::int64_t multiplicity = 1;

  friend bool operator==(const BoundedItem&, const BoundedItem&) = default;
};

struct Instance01 {
  std::vector<Item01> items;
  std::int64_t capacity = 0;

  std::size_t size() const { return items.size(); }
  friend bool operator==(const Instance01&, const Instance01&) = default;
};

struct BoundedInstance {
  std::vector<BoundedItem> items;
  std::int64_t capacity = 0;

  std::size_t size() const { return items.size(); }
  friend bool operator==(const BoundedInstance&, const BoundedInstance&) = default;
};

/// Throws ValidationError if any value is outside the supported domain.
void validate(const Instance01& instance);
void validate(const BoundedInstance& instance);

/// True iff a.profit / a.weight > b.profit / b.weight, by cross-multiplication.
template <class Item>
bool ratio_greater(const Item& a, const Item& b) {
  return a.profit * static_cast<Int128>(b.weight) > b.profit * static_cast<Int128>(a.weight);
}

template <class Item>
bool ratio_equal(const Item& a, const Item& b) {
  return a.profit * static_cast<Int128>(b.weight) == b.profit * static_cast<Int128>(a.weight);
}

/// Non-increasing ratios (adjacent pairs suffice by transitivity).
template <class Item>
bool is_ratio_sorted(std::span<const Item> items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (ratio_greater(items[i], items[i - 1])) return false;
  }
  return true;
}

template <class Item>
bool has_strictly_decreasing_ratios(std::span<const Item> items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (!ratio_greater(items[i - 1], items[i])) return false;
  }
  return true;
}

/// Stable sort by ratio descending; equal ratios keep input order.
/// Validates first.
Instance01 canonical_sort(Instance01 instance);
BoundedInstance canonical_sort(BoundedInstance instance);

template <class Item>
std::int64_t max_weight(std::span<const Item> items) {
  std::int64_t w = 0;
  for (const auto& it : items) w = std::max(w, it.weight);
  return w;
}
inline std::int64_t max_weight(const Instance01& in) { return max_weight<Item01>(in.items); }
inline std::int64_t max_weight(const BoundedInstance& in) { return max_weight<BoundedItem>(in.items); }

Int128 total_weight(const Instance01& instance);
Int128 total_profit(const Instance01& instance);
/// Sum of u_i * w_i.
Int128 total_weight(const BoundedInstance& instance);
/// Sum of u_i * p_i.
Int128 total_profit(const BoundedInstance& instance);

/// Maximal prefix solution g.
///
/// `cut` is the 0-based index of the first item not fully taken; items
/// [0, cut) are taken completely (all u_i copies in the bounded case), and
/// cut == n means everything fits. In the bounded case `bounded_partial`
/// copies of item `cut` are taken as well.
struct PrefixSolution {
  std::size_t cut = 0;
  std::int64_t bounded_partial = 0;
  std::int64_t total_weight = 0;
  Int128 total_profit = 0;

  /// g_i for a 0-1 instance.
  bool picks(std::size_t i) const { return i < cut; }

  /// g_i for a bounded instance with multiplicities u.
  std::int64_t copies(std::size_t i, std::int64_t multiplicity) const {
    if (i < cut) return multiplicity;
    if (i == cut) return bounded_partial;
    return 0;
  }
};

/// Precondition: instance ratio-sorted.
PrefixSolution maximal_prefix_01(const Instance01& instance);
PrefixSolution maximal_prefix_bounded(const BoundedInstance& instance);

}  // namespace knapsack
