#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "knapsack/ext_profit.hpp"

namespace knapsack {

template <class Value>
struct RowMaximum {
  std::size_t col = 0;
  Value value{};

  friend bool operator==(const RowMaximum&, const RowMaximum&) = default;
};

namespace detail {

// Row maxima of a totally monotone matrix restricted to `rows` x `cols`
// (both strictly increasing index lists). Ties go to the leftmost column.
template <class Value, class Eval>
void smawk_rec(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols, Eval& eval,
               std::vector<RowMaximum<Value>>& out) {
  if (rows.empty()) return;

  // REDUCE: keep at most |rows| candidate columns. top[k] caches the entry
  // of kept[k] in rows[k], the row it is compared on while it sits at k.
  std::vector<std::size_t> kept;
  std::vector<Value> top;
  kept.reserve(std::min(rows.size(), cols.size()));
  top.reserve(kept.capacity());
  for (std::size_t c : cols) {
    while (!kept.empty()) {
      if (top.back() < eval(rows[kept.size() - 1], c)) {
        kept.pop_back();
        top.pop_back();
      } else {
        break;
      }
    }
    if (kept.size() < rows.size()) {
      top.push_back(eval(rows[kept.size()], c));
      kept.push_back(c);
    }
  }

  std::vector<std::size_t> odd_rows;
  odd_rows.reserve(rows.size() / 2);
  for (std::size_t i = 1; i < rows.size(); i += 2) odd_rows.push_back(rows[i]);
  smawk_rec<Value>(odd_rows, kept, eval, out);

  // INTERPOLATE: even rows search between the answers of their odd neighbours.
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    const std::size_t r = rows[i];
    const std::size_t stop = i + 1 < rows.size() ? out[rows[i + 1]].col : kept.back();
    std::size_t best_col = kept[k];
    Value best = eval(r, best_col);
    while (kept[k] != stop) {
      ++k;
      Value v = eval(r, kept[k]);
      if (best < v) {
        best = v;
        best_col = kept[k];
      }
    }
    out[r] = RowMaximum<Value>{best_col, best};
  }
}

}  // namespace detail

/// Row maxima of a rows x cols matrix given implicitly by eval(row, col).
///
/// Requires the leftmost row maximum to be non-decreasing in the row index
/// on every submatrix, which holds for inverse-Monge matrices over any
/// totally ordered abelian group. Uses O(rows + cols) evaluations.
template <class Value, class Eval>
std::vector<RowMaximum<Value>> smawk_row_maxima(std::size_t rows, std::size_t cols, Eval&& eval) {
  std::vector<RowMaximum<Value>> out(cols == 0 ? 0 : rows);
  if (rows == 0 || cols == 0) return out;
  std::vector<std::size_t> row_ids(rows);
  std::vector<std::size_t> col_ids(cols);
  std::iota(row_ids.begin(), row_ids.end(), std::size_t{0});
  std::iota(col_ids.begin(), col_ids.end(), std::size_t{0});
  detail::smawk_rec<Value>(row_ids, col_ids, eval, out);
  return out;
}

/// Exhaustive scan with the same leftmost tie rule.
template <class Value, class Eval>
std::vector<RowMaximum<Value>> bruteforce_row_maxima(std::size_t rows, std::size_t cols, Eval&& eval) {
  std::vector<RowMaximum<Value>> out;
  if (cols == 0) return out;
  out.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    RowMaximum<Value> best{0, eval(r, 0)};
    for (std::size_t c = 1; c < cols; ++c) {
      Value v = eval(r, c);
      if (best.value < v) best = {c, v};
    }
    out.push_back(best);
  }
  return out;
}

/// Implicit ExtProfit matrix. `eval` must be pure.
struct ImplicitMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::function<ExtProfit(std::size_t, std::size_t)> eval;
};

/// SMAWK row maxima of an inverse-Monge ExtProfit matrix.
///
/// Rows whose entries are all NEG_INF report column 0. If `eval_count` is
/// non-null it receives the number of eval calls.
std::vector<RowMaximum<ExtProfit>> row_maxima(const ImplicitMatrix& m, std::uint64_t* eval_count = nullptr);
std::vector<RowMaximum<ExtProfit>> row_maxima_bruteforce(const ImplicitMatrix& m,
                                                         std::uint64_t* eval_count = nullptr);

/// Checks the inverse-Monge inequality on all adjacent 2x2 minors, with
/// NEG_INF-absorbing addition. O(rows * cols); for tests and debugging.
bool is_inverse_monge(const ImplicitMatrix& m);

}  // namespace knapsack
