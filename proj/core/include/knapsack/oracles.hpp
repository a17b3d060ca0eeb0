#pragma once

#include <cstddef>
#include <cstdint>

#include "knapsack/model.hpp"

namespace knapsack {

// Reference solvers. Slow on purpose and refuse, with BudgetExceeded,
// instances that would not fit their size budgets.

struct OracleBudget {
  /// Upper bound on items * (capacity + 1) DP cell updates.
  std::uint64_t max_cells = std::uint64_t{1} << 31;
  /// Upper bound on capacity + 1 (the DP row length).
  std::uint64_t max_row = std::uint64_t{1} << 27;
  /// Upper bound on items for exhaustive enumeration.
  std::size_t max_brute_force_items = 24;
};

/// Classic O(n W) table.
ExtProfit bellman_01(const Instance01& instance, const OracleBudget& budget = {});

/// Splits each multiplicity into powers of two and runs bellman_01.
ExtProfit bellman_bounded(const BoundedInstance& instance, const OracleBudget& budget = {});

/// Enumerates all 2^n subsets.
ExtProfit brute_force_01(const Instance01& instance, const OracleBudget& budget = {});

}  // namespace knapsack
