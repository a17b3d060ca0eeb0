#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "knapsack/ext_profit.hpp"

namespace knapsack {

/// Sequence indexed by total weight; entries are finite or NEG_INF.
using ProfitSeq = std::vector<ExtProfit>;

/// A sequence that is finite exactly at 0, h, ..., count*h and has
/// non-increasing successive differences along that progression.
struct ConcaveSeq {
  ProfitSeq seq;
  std::size_t offset = 1;  // h
  std::size_t count = 0;   // ell
};

/// Throws PreconditionError unless `y` satisfies the ConcaveSeq invariants.
void check_concave(const ConcaveSeq& y);
bool is_concave(const ConcaveSeq& y) noexcept;

inline constexpr std::size_t kFullLength = std::numeric_limits<std::size_t>::max();

/// (max,+)-convolution of an arbitrary x with a concave y in O(|x| + |y| + h)
/// via one SMAWK pass per residue class modulo h.
///
/// Only the first min(out_len, |x| + |y| - 1) entries are produced. The
/// concavity of y is checked first. If `eval_count` is non-null the number
/// of matrix evaluations is added to it.
ProfitSeq conv_concave(const ProfitSeq& x, const ConcaveSeq& y, std::size_t out_len = kFullLength,
                       std::uint64_t* eval_count = nullptr);

/// Definitional O(|x| * |y|) double loop.
ProfitSeq conv_naive(const ProfitSeq& x, const ProfitSeq& y);

/// s[i] = max(x[0..i]).
ProfitSeq prefix_max(const ProfitSeq& x);

}  // namespace knapsack
