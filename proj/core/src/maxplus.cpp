#include "knapsack/maxplus.hpp"

#include <algorithm>
#include <compare>
#include <string>

#include "knapsack/smawk.hpp"

namespace knapsack {
namespace {

// Matrix entry of the per-residue convolution matrix, ordered
// lexicographically. `level` is 0 for genuine finite entries and negative
// for entries that are NEG_INF in the definition: -1 for a NEG_INF x
// column, minus the distance outside the band where y is finite. Both
// penalties are concave in (row - col) or depend on the column only, so the
// matrix stays inverse-Monge over this ordered group and SMAWK applies
// without any NEG_INF special cases.
struct Leveled {
  std::int64_t level = 0;
  Int128 value = 0;

  friend auto operator<=>(const Leveled&, const Leveled&) = default;
};

constexpr std::size_t kBandScanLimit = 8;

std::string concavity_failure(const ConcaveSeq& y) {
  if (y.offset == 0) return "offset must be positive";
  const std::size_t h = y.offset;
  if (y.seq.empty()) return "sequence is empty";
  if (y.count > (y.seq.size() - 1) / h) return "count * offset exceeds sequence length";
  for (std::size_t k = 0; k < y.seq.size(); ++k) {
    const bool on_progression = k % h == 0 && k / h <= y.count;
    if (on_progression != y.seq[k].is_finite()) {
      return "entry " + std::to_string(k) + (on_progression ? " must be finite" : " must be NEG_INF");
    }
  }
  for (std::size_t i = 1; i < y.count; ++i) {
    const Int128 left = y.seq[i * h].value() - y.seq[(i - 1) * h].value();
    const Int128 right = y.seq[(i + 1) * h].value() - y.seq[i * h].value();
    if (left < right) return "differences increase at step " + std::to_string(i);
  }
  return {};
}

}  // namespace

bool is_concave(const ConcaveSeq& y) noexcept {
  try {
    return concavity_failure(y).empty();
  } catch (...) {
    return false;
  }
}

void check_concave(const ConcaveSeq& y) {
  if (auto why = concavity_failure(y); !why.empty()) {
    throw PreconditionError("conv_concave: y is not concave: " + why);
  }
}

ProfitSeq conv_concave(const ProfitSeq& x, const ConcaveSeq& y, std::size_t out_len, std::uint64_t* eval_count) {
  check_concave(y);
  if (x.empty()) return {};
  const std::size_t len = std::min(out_len, x.size() + y.seq.size() - 1);
  ProfitSeq z(len, kNegInf);
  if (len == 0) return z;

  const ExtProfit y0 = y.seq[0];
  if (y.count == 0) {
    for (std::size_t k = 0; k < std::min(len, x.size()); ++k) z[k] = x[k] + y0;
    return z;
  }

  const std::size_t h = y.offset;
  const auto ell = static_cast<std::int64_t>(y.count);
  std::uint64_t evals = 0;

  // Few copies: the band i - ell <= j <= i is narrow enough to scan.
  if (y.count < kBandScanLimit) {
    for (std::size_t k = 0; k < len; ++k) {
      ExtProfit best = kNegInf;
      for (std::size_t t = 0; t <= y.count && t * h <= k; ++t) {
        const std::size_t src = k - t * h;
        if (src >= x.size()) continue;
        ++evals;
        best = max(best, x[src] + y.seq[t * h]);
      }
      z[k] = best;
    }
    if (eval_count != nullptr) *eval_count += evals;
    return z;
  }

  // Residue classes are gathered into contiguous buffers first; the strided
  // reads otherwise dominate for large h.
  std::vector<Int128> ys(y.count + 1);
  for (std::size_t t = 0; t <= y.count; ++t) ys[t] = y.seq[t * h].value();
  std::vector<Int128> xs;
  std::vector<std::int64_t> x_level;
  for (std::size_t r = 0; r < std::min(h, len); ++r) {
    if (r >= x.size()) break;
    const std::size_t rows = (len - r + h - 1) / h;
    const std::size_t cols = (x.size() - r + h - 1) / h;
    xs.resize(cols);
    x_level.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const ExtProfit xv = x[j * h + r];
      xs[j] = xv.is_finite() ? xv.value() : 0;
      x_level[j] = xv.is_finite() ? 0 : -1;
    }
    auto eval = [&](std::size_t i, std::size_t j) {
      ++evals;
      const std::int64_t d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
      const std::int64_t clamped = std::clamp<std::int64_t>(d, 0, ell);
      return Leveled{x_level[j] + std::min<std::int64_t>(0, d) + std::min<std::int64_t>(0, ell - d),
                     checked_add(xs[j], ys[static_cast<std::size_t>(clamped)])};
    };
    const auto maxima = smawk_row_maxima<Leveled>(rows, cols, eval);
    for (std::size_t i = 0; i < rows; ++i) {
      if (maxima[i].value.level == 0) z[i * h + r] = ExtProfit(maxima[i].value.value);
    }
  }
  if (eval_count != nullptr) *eval_count += evals;
  return z;
}

ProfitSeq conv_naive(const ProfitSeq& x, const ProfitSeq& y) {
  if (x.empty() || y.empty()) return {};
  ProfitSeq z(x.size() + y.size() - 1, kNegInf);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_neg_inf()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      z[i + j] = max(z[i + j], x[i] + y[j]);
    }
  }
  return z;
}

ProfitSeq prefix_max(const ProfitSeq& x) {
  ProfitSeq s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = i == 0 ? x[0] : max(s[i - 1], x[i]);
  return s;
}

}  // namespace knapsack
