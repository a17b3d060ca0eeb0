#include "knapsack/smawk.hpp"

namespace knapsack {
namespace {

template <class Search>
std::vector<RowMaximum<ExtProfit>> run_counted(const ImplicitMatrix& m, std::uint64_t* eval_count,
                                               Search search) {
  std::uint64_t calls = 0;
  auto counted = [&](std::size_t r, std::size_t c) {
    ++calls;
    return m.eval(r, c);
  };
  auto out = search(m.rows, m.cols, counted);
  for (auto& rm : out) {
    if (rm.value.is_neg_inf()) rm.col = 0;
  }
  if (eval_count != nullptr) *eval_count = calls;
  return out;
}

}  // namespace

std::vector<RowMaximum<ExtProfit>> row_maxima(const ImplicitMatrix& m, std::uint64_t* eval_count) {
  return run_counted(m, eval_count, [](std::size_t rows, std::size_t cols, auto& eval) {
    return smawk_row_maxima<ExtProfit>(rows, cols, eval);
  });
}

std::vector<RowMaximum<ExtProfit>> row_maxima_bruteforce(const ImplicitMatrix& m, std::uint64_t* eval_count) {
  return run_counted(m, eval_count, [](std::size_t rows, std::size_t cols, auto& eval) {
    return bruteforce_row_maxima<ExtProfit>(rows, cols, eval);
  });
}

bool is_inverse_monge(const ImplicitMatrix& m) {
  for (std::size_t i = 0; i + 1 < m.rows; ++i) {
    for (std::size_t j = 0; j + 1 < m.cols; ++j) {
      const ExtProfit diag = m.eval(i, j) + m.eval(i + 1, j + 1);
      const ExtProfit anti = m.eval(i + 1, j) + m.eval(i, j + 1);
      if (diag < anti) return false;
    }
  }
  return true;
}

}  // namespace knapsack
