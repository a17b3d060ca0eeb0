#include "knapsack/solver01.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace knapsack {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Best profit of a subset of `indices` with total weight exactly w, for
// every w <= limit (NEG_INF if none). `negate` flips profit signs.
ProfitSeq exact_weight_table(const Instance01& instance, const std::vector<std::size_t>& indices,
                             std::size_t limit, bool negate) {
  ProfitSeq best(limit + 1, kNegInf);
  best[0] = 0;
  for (std::size_t i : indices) {
    const auto w = static_cast<std::size_t>(instance.items[i].weight);
    const ExtProfit p = negate ? -ExtProfit(instance.items[i].profit) : ExtProfit(instance.items[i].profit);
    for (std::size_t c = limit; c >= w && c <= limit; --c) best[c] = max(best[c], best[c - w] + p);
  }
  return best;
}

void check_realizable(const Instance01& instance, const PrefixSolution& g, const ProfitSeq& z_plus,
                      const ProfitSeq& z_minus) {
  std::vector<std::size_t> picked;
  std::vector<std::size_t> unpicked;
  for (std::size_t i = 0; i < instance.size(); ++i) (g.picks(i) ? picked : unpicked).push_back(i);
  const ProfitSeq plus = exact_weight_table(instance, unpicked, z_plus.size() - 1, false);
  const ProfitSeq minus = exact_weight_table(instance, picked, z_minus.size() - 1, true);
  for (std::size_t w = 0; w < z_plus.size(); ++w) {
    if (z_plus[w].is_finite() && !(z_plus[w] <= plus[w])) {
      throw InvariantError("solve_01: z+[" + std::to_string(w) + "] is not realizable");
    }
  }
  for (std::size_t w = 0; w < z_minus.size(); ++w) {
    if (z_minus[w].is_finite() && !(z_minus[w] <= minus[w])) {
      throw InvariantError("solve_01: z-[" + std::to_string(w) + "] is not realizable");
    }
  }
}

void check_parts(const Instance01& instance, const std::vector<Part>& parts) {
  std::vector<char> seen(instance.size(), 0);
  std::size_t covered = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].delta < 0) throw PreconditionError("solve_01: negative delta");
    if (j > 0 && parts[j].delta < parts[j - 1].delta) {
      throw PreconditionError("solve_01: part deltas must be sorted ascending");
    }
    for (std::size_t i : parts[j].indices) {
      if (i >= instance.size() || seen[i] != 0) {
        throw PreconditionError("solve_01: parts must be a partition of the items");
      }
      seen[i] = 1;
      ++covered;
    }
  }
  if (covered != instance.size()) throw PreconditionError("solve_01: parts must cover every item");
}

}  // namespace

ConcaveSeq equal_weights(const WeightGroup& group, std::size_t budget) {
  if (group.weight < 1) throw PreconditionError("equal_weights: weight must be positive");
  for (std::size_t i = 1; i < group.profits.size(); ++i) {
    if (group.profits[i - 1] < group.profits[i]) {
      throw PreconditionError("equal_weights: profits must be non-increasing");
    }
  }
  const auto h = static_cast<std::size_t>(group.weight);
  ConcaveSeq y;
  y.offset = h;
  y.seq.assign(budget + 1, kNegInf);
  y.count = std::min(group.profits.size(), budget / h);
  ExtProfit sum = 0;
  y.seq[0] = sum;
  for (std::size_t i = 1; i <= y.count; ++i) {
    sum += group.profits[i - 1];
    y.seq[i * h] = sum;
  }
  return y;
}

ExtProfit solve_01(const Instance01& instance, const std::vector<Part>& parts, const SolveOptions& options) {
  validate(instance);
  if (!has_strictly_decreasing_ratios<Item01>(instance.items)) {
    throw PreconditionError("solve_01: profit-to-weight ratios must be strictly decreasing");
  }
  check_parts(instance, parts);
  const auto start = Clock::now();

  Int128 delta_total = 0;
  for (const auto& p : parts) delta_total += p.delta;
  Int128 limit = delta_total;
  if (options.classic_truncation && !instance.items.empty()) {
    const Int128 w_max = max_weight(instance);
    limit = std::min(limit, (2 * w_max - 1) * w_max);
  }
  if (limit + 1 > static_cast<Int128>(options.max_sequence_length)) {
    throw BudgetExceeded("solve_01: DP sequence length " + to_string(limit + 1) +
                         " exceeds the sequence length budget");
  }
  const auto cap = static_cast<std::size_t>(limit);

  const PrefixSolution g = maximal_prefix_01(instance);
  ProfitSeq z_plus{ExtProfit(0)};
  ProfitSeq z_minus{ExtProfit(0)};
  std::size_t prefix_delta = 0;
  std::size_t convolutions = 0;
  std::uint64_t evals = 0;

  std::vector<std::size_t> deltas(parts.size());
  std::vector<std::size_t> lens(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    deltas[j] = static_cast<std::size_t>(std::min<Int128>(parts[j].delta, limit));
    prefix_delta += deltas[j];
    lens[j] = std::min(prefix_delta, cap) + 1;
  }

  // Phases that truncate to the same length are folded together: for one
  // weight, the product of concave prefix-sum sequences is the prefix-sum
  // sequence of the merged profit lists, and truncation commutes with the
  // remaining products. z+ and z- come out identical to phase-by-phase
  // processing.
  struct Entry {
    std::int64_t weight;
    ExtProfit profit;
  };
  std::vector<Entry> plus_items;
  std::vector<Entry> minus_items;
  std::vector<std::size_t> by_weight;
  std::vector<ExtProfit> picked;

  auto fold = [&](ProfitSeq& z, std::vector<Entry>& items, Side side, std::size_t len) {
    std::sort(items.begin(), items.end(), [](const Entry& a, const Entry& b) {
      return a.weight != b.weight ? a.weight < b.weight : b.profit < a.profit;
    });
    WeightGroup group;
    group.side = side;
    for (std::size_t lo = 0; lo < items.size();) {
      group.weight = items[lo].weight;
      group.profits.clear();
      std::size_t hi = lo;
      for (; hi < items.size() && items[hi].weight == group.weight; ++hi) group.profits.push_back(items[hi].profit);
      lo = hi;
      if (options.deadline && Clock::now() > *options.deadline) {
        throw BudgetExceeded("solve_01: time limit reached after " + std::to_string(convolutions) + " convolutions");
      }
      z = conv_concave(z, equal_weights(group, len - 1), len, &evals);
      ++convolutions;
    }
    items.clear();
  };

  for (std::size_t j = 0; j < parts.size();) {
    const std::size_t len = lens[j];
    std::size_t end = j;
    do {
      const std::size_t delta = deltas[end];
      by_weight = parts[end].indices;
      std::stable_sort(by_weight.begin(), by_weight.end(), [&](std::size_t a, std::size_t b) {
        return instance.items[a].weight < instance.items[b].weight;
      });
      for (std::size_t lo = 0; lo < by_weight.size();) {
        const std::int64_t w = instance.items[by_weight[lo]].weight;
        // Only the first delta / w copies of a group can ever be used.
        const std::size_t usable = delta / static_cast<std::size_t>(w);
        std::size_t added = 0;
        picked.clear();
        std::size_t hi = lo;
        for (; hi < by_weight.size() && instance.items[by_weight[hi]].weight == w; ++hi) {
          const std::size_t i = by_weight[hi];
          if (g.picks(i)) {
            picked.push_back(instance.items[i].profit);
          } else if (added < usable) {
            // Index order is profit order within a weight.
            plus_items.push_back({w, instance.items[i].profit});
            ++added;
          }
        }
        lo = hi;
        // Removal side: the least profitable picked items go first.
        for (std::size_t t = 0; t < std::min(usable, picked.size()); ++t) {
          minus_items.push_back({w, -picked[picked.size() - 1 - t]});
        }
      }
      ++end;
    } while (options.merge_phases && end < parts.size() && lens[end] == len);

    fold(z_plus, plus_items, Side::kUnpicked, len);
    fold(z_minus, minus_items, Side::kPicked, len);
    z_plus.resize(len, kNegInf);
    z_minus.resize(len, kNegInf);
    j = end;
  }
  if (z_plus.size() != std::min(prefix_delta, cap) + 1 || z_minus.size() != z_plus.size()) {
    throw InvariantError("solve_01: DP sequences have the wrong truncation length");
  }

  if (options.check_realizability && instance.size() <= 24) check_realizable(instance, g, z_plus, z_minus);

  const ProfitSeq s_plus = prefix_max(z_plus);
  const std::size_t total = z_plus.size() - 1;
  const auto slack = static_cast<std::uint64_t>(instance.capacity - g.total_weight);
  ExtProfit best = kNegInf;
  for (std::size_t b = 0; b <= total; ++b) {
    if (z_minus[b].is_neg_inf()) continue;
    const std::size_t a = slack >= total - b ? total : b + static_cast<std::size_t>(slack);
    best = max(best, s_plus[a] + z_minus[b]);
  }
  if (!(best >= ExtProfit(0))) throw InvariantError("solve_01: result below the prefix solution");

  if (options.stats != nullptr) {
    options.stats->parts = parts.size();
    options.stats->delta_sum = delta_total;
    options.stats->convolutions = convolutions;
    options.stats->smawk_evals = evals;
    options.stats->combine_seconds = seconds_since(start);
  }
  return ExtProfit(g.total_profit) + best;
}

ExtProfit solve_01_auto(const Instance01& instance, const SolveOptions& options) {
  validate(instance);
  if (!has_strictly_decreasing_ratios<Item01>(instance.items)) {
    throw PreconditionError("solve_01_auto: profit-to-weight ratios must be strictly decreasing");
  }
  if (total_weight(instance) <= instance.capacity) {
    if (options.stats != nullptr) *options.stats = SolveStats{};
    return ExtProfit(total_profit(instance));
  }

  const auto start = Clock::now();
  const PrefixSolution g = maximal_prefix_01(instance);
  std::vector<Part> parts = partition(instance, g, options.partition);
  for (auto& p : parts) p = cap_delta(std::move(p), instance);
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.delta < b.delta; });
  const double partition_seconds = seconds_since(start);

  const ExtProfit value = solve_01(instance, parts, options);
  if (options.stats != nullptr) options.stats->partition_seconds = partition_seconds;
  return value;
}

}  // namespace knapsack
