#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "knapsack/model.hpp"
#include "knapsack/solver01.hpp"

namespace knapsack {

/// Output of trimming a bounded instance against its prefix solution.
struct TrimResult {
  BoundedInstance trimmed;              // zero-multiplicity items dropped, order kept
  Int128 committed_profit = 0;          // P
  std::int64_t reduced_capacity = 0;    // W-bar
  std::int64_t w_max = 0;               // of the original instance
  std::vector<std::int64_t> removed;    // u^(0), per original item
  std::vector<std::int64_t> committed;  // u^(1), per original item
};

/// Per weight class keeps at most 2 w_max picked and 2 w_max unpicked copies,
/// committing the most profitable picked surplus and discarding the least
/// profitable unpicked surplus. Runs without touching individual copies.
/// Precondition: instance ratio-sorted.
TrimResult trim_bounded(const BoundedInstance& instance);

/// Writes every remaining copy as a 0-1 item, order preserved. Throws
/// InvariantError if the total multiplicity exceeds 4 w_max^2.
Instance01 expand_to_01(const TrimResult& trimmed);

struct PerturbedInstance {
  Instance01 instance;
  Int128 scale = 1;  // M
};

/// p_i <- M p_i + (n - 1 - i) w_i with M = n^2 w_max + 1 (0-based i), which
/// makes all ratios strictly distinct and preserves the optimal base profit.
/// Precondition: ratio-sorted.
PerturbedInstance perturb_profits(const Instance01& instance);

struct ReducedInstance {
  Instance01 instance01;  // perturbed, strictly decreasing ratios
  Int128 committed_profit = 0;
  std::int64_t reduced_capacity = 0;
  Int128 scale = 1;
  std::size_t original_n_bar = 0;
};

/// trim_bounded, expand_to_01 and perturb_profits. Validates and sorts first.
ReducedInstance reduce(const BoundedInstance& instance);

/// floor(value / M) + P.
ExtProfit recover(ExtProfit value_perturbed, const ReducedInstance& reduced);

/// Optimal value of a bounded instance through the reduction and the
/// proximity solver. Returns sum u_i p_i directly when everything fits.
ExtProfit solve_bounded(const BoundedInstance& instance, const SolveOptions& options = {});

/// Perturbs a 0-1 instance (after canonical sorting), solves it with
/// solve_01_auto and recovers the original value.
ExtProfit solve_01_perturbed(const Instance01& instance, const SolveOptions& options = {});

}  // namespace knapsack
