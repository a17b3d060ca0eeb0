#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "knapsack/model.hpp"

namespace knapsack {

/// Leading constant of the per-step proximity bound.
inline constexpr long double kDeltaConstant = 36000000.0L;
/// Leading constant of the support * delta product bound.
inline constexpr long double kProductConstant = 300000000.0L;

/// Which side of the prefix solution a part was drawn from. Every part is
/// one-sided: it is a subset of either the picked or the unpicked items.
enum class Side { kPicked, kUnpicked };

/// Intermediate sets of one partitioning step, all as sorted index lists.
struct SingleStepState {
  std::uint64_t m = 0;                    // largest power of two with a non-empty weight class
  std::vector<std::int64_t> weight_class;  // weights occurring in (m/2, m] times in U, ascending
  std::vector<std::size_t> j_all;          // J
  std::vector<std::size_t> j_minus;        // J ∩ picked
  std::vector<std::size_t> j_plus;         // J ∩ unpicked
  std::vector<std::size_t> i_minus;        // first ceil(|J-|/2) of J-
  std::vector<std::size_t> i_plus;         // last ceil(|J+|/2) of J+
  std::uint64_t potential = 0;             // phi(U)
};

struct Part {
  std::vector<std::size_t> indices;  // ascending
  Int128 proximity_delta = 0;            // ceil of the uncapped formula (saturated at 2^120)
  Int128 delta = 0;                  // effective bound used by the solver
  std::size_t support = 0;           // distinct weights among `indices`
  Side side = Side::kUnpicked;
};

struct PartitionOptions {
  /// Replaces the 36000000 constant. Anything smaller makes the solver a
  /// heuristic whose answers must be cross-checked.
  std::optional<long double> delta_constant;
  /// Assert cover, Observation-4.2 size, potential decrease and the product
  /// bound on every step.
  bool check_invariants = true;
};

/// Smallest e >= 0 with (4/3)^e >= x, computed exactly. Precondition x >= 1.
std::uint64_t ceil_log_4_3(std::uint64_t x);

/// ceil(constant * log2(2n)^3 * m * w_max^2 / chosen_size), saturated.
Int128 proximity_delta(std::size_t n, std::uint64_t m, std::int64_t w_max, std::size_t chosen_size,
                   long double constant = kDeltaConstant);

/// 300000000 * log2(2n)^3 * w_max^2 as a long double.
long double product_bound(std::size_t n, std::int64_t w_max);

/// One partitioning step on the live set `live` (sorted, non-empty, indices
/// into `instance`). Precondition: instance has strictly decreasing ratios
/// and `g` is its maximal prefix solution.
std::pair<Part, SingleStepState> single_step(const Instance01& instance, const PrefixSolution& g,
                                             std::span<const std::size_t> live,
                                             const PartitionOptions& options = {});

/// delta = min(proximity_delta, (2 w_max - 1) * w_max, sum of weights in the part).
Part cap_delta(Part part, const Instance01& instance);

/// phi(U) = log2(m_U) * 2 ceil(log_{4/3} n) + ceil(log_{4/3} |J_U|).
std::uint64_t potential(std::span<const std::size_t> live, const Instance01& instance);

/// Repeated single_step until every item is assigned. Parts come out in
/// discovery order with uncapped deltas. `steps`, when non-null, receives
/// the state of every step.
std::vector<Part> partition(const Instance01& instance, const PrefixSolution& g,
                            const PartitionOptions& options = {},
                            std::vector<SingleStepState>* steps = nullptr);

/// Upper bound on the number of parts implied by the strictly decreasing
/// potential: 2 * ceil(log2(2n)) * ceil(log_{4/3} n) + 1.
std::uint64_t part_count_bound(std::size_t n);

}  // namespace knapsack
