#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "knapsack/maxplus.hpp"
#include "knapsack/model.hpp"
#include "knapsack/proximity.hpp"

namespace knapsack {

/// Items of one weight on one side of the prefix solution.
struct WeightGroup {
  std::int64_t weight = 1;
  std::vector<ExtProfit> profits;  // non-increasing
  Side side = Side::kUnpicked;
};

/// y[i * weight] = sum of the i largest profits for i = 0..min(count, budget / weight),
/// NEG_INF elsewhere; length budget + 1.
ConcaveSeq equal_weights(const WeightGroup& group, std::size_t budget);

struct SolveStats {
  std::size_t parts = 0;
  Int128 delta_sum = 0;
  std::size_t convolutions = 0;
  std::uint64_t smawk_evals = 0;
  double partition_seconds = 0;
  double combine_seconds = 0;
};

struct SolveOptions {
  PartitionOptions partition;
  /// Also truncate z+ and z- to (2 w_max - 1) * w_max, the total weight
  /// that an optimal solution closest to the prefix solution can move. When
  /// false only the per-phase prefix sums of the deltas truncate.
  bool classic_truncation = true;
  /// Fold consecutive phases with equal truncation length into one pass
  /// per weight. Gives the same sequences with fewer convolutions.
  bool merge_phases = true;
  /// Refuse to allocate DP sequences longer than this.
  std::size_t max_sequence_length = std::size_t{1} << 28;
  /// Give up with BudgetExceeded once this time has passed. Checked
  /// between convolutions.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Debug realizability checks on z+/z- (only applied when n <= 24).
  bool check_realizability = false;
  SolveStats* stats = nullptr;
};

/// Optimal value of a 0-1 instance with strictly decreasing ratios, given a
/// partition whose deltas are valid proximity bounds and sorted ascending.
ExtProfit solve_01(const Instance01& instance, const std::vector<Part>& parts, const SolveOptions& options = {});

/// Prefix solution, partition, delta capping, ascending sort, then solve_01.
/// Returns the total profit directly when every item fits.
ExtProfit solve_01_auto(const Instance01& instance, const SolveOptions& options = {});

}  // namespace knapsack
