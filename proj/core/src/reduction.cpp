#include "knapsack/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace knapsack {

TrimResult trim_bounded(const BoundedInstance& instance) {
  validate(instance);
  if (!is_ratio_sorted<BoundedItem>(instance.items)) {
    throw PreconditionError("trim_bounded: instance must be sorted by ratio");
  }
  const auto& items = instance.items;
  const std::size_t n = items.size();
  const PrefixSolution g = maximal_prefix_bounded(instance);

  TrimResult out;
  out.w_max = max_weight(instance);
  out.removed.assign(n, 0);
  out.committed.assign(n, 0);
  const Int128 threshold = 2 * static_cast<Int128>(out.w_max);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return items[a].weight < items[b].weight; });

  std::vector<std::size_t> cls;
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    cls.clear();
    while (hi < n && items[order[hi]].weight == items[order[lo]].weight) cls.push_back(order[hi++]);
    lo = hi;

    auto u = [&](std::size_t pos) -> Int128 { return items[cls[pos]].multiplicity; };
    auto picked = [&](std::size_t pos) -> Int128 { return g.copies(cls[pos], items[cls[pos]].multiplicity); };

    // Boundary position t: everything before it is taken completely by g,
    // nothing after it is taken at all.
    std::size_t t = 0;
    while (t + 1 < cls.size() && picked(t) == u(t)) ++t;

    // Unpicked copies: discard from the least profitable end down to 2 w_max.
    Int128 unpicked = u(t) - picked(t);
    for (std::size_t j = t + 1; j < cls.size(); ++j) unpicked += u(j);
    if (unpicked > threshold) {
      std::size_t ell = cls.size() - 1;
      while (ell > t && unpicked - u(ell) >= threshold) {
        out.removed[cls[ell]] = items[cls[ell]].multiplicity;
        unpicked -= u(ell);
        --ell;
      }
      out.removed[cls[ell]] = static_cast<std::int64_t>(unpicked - threshold);
    }

    // Picked copies: commit from the most profitable end down to 2 w_max.
    Int128 taken = 0;
    for (std::size_t j = 0; j <= t; ++j) taken += picked(j);
    if (taken > threshold) {
      std::size_t a = 0;
      while (a < t && taken - picked(a) >= threshold) {
        out.committed[cls[a]] = items[cls[a]].multiplicity;
        taken -= picked(a);
        ++a;
      }
      out.committed[cls[a]] = static_cast<std::int64_t>(taken - threshold);
    }

    Int128 kept = 0;
    for (std::size_t pos = 0; pos < cls.size(); ++pos) {
      kept += u(pos) - out.removed[cls[pos]] - out.committed[cls[pos]];
    }
    if (kept > 2 * threshold) throw InvariantError("trim_bounded: more than 4 w_max copies left in a weight class");
  }

  Int128 committed_weight = 0;
  out.trimmed.items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.committed_profit = checked_add(out.committed_profit, checked_mul(items[i].profit, out.committed[i]));
    committed_weight += static_cast<Int128>(items[i].weight) * out.committed[i];
    const std::int64_t rest = items[i].multiplicity - out.removed[i] - out.committed[i];
    if (rest < 0) throw InvariantError("trim_bounded: negative remaining multiplicity");
    if (rest > 0) out.trimmed.items.push_back({items[i].weight, items[i].profit, rest});
  }
  if (committed_weight > instance.capacity) throw InvariantError("trim_bounded: committed copies exceed capacity");
  out.reduced_capacity = instance.capacity - static_cast<std::int64_t>(committed_weight);
  out.trimmed.capacity = out.reduced_capacity;
  return out;
}

Instance01 expand_to_01(const TrimResult& trimmed) {
  const Int128 bound = 4 * static_cast<Int128>(trimmed.w_max) * trimmed.w_max;
  Int128 total = 0;
  for (const auto& it : trimmed.trimmed.items) total += it.multiplicity;
  if (total > bound) {
    throw InvariantError("expand_to_01: total multiplicity " + to_string(total) + " exceeds 4 w_max^2");
  }
  Instance01 out;
  out.capacity = trimmed.trimmed.capacity;
  out.items.reserve(static_cast<std::size_t>(total));
  for (const auto& it : trimmed.trimmed.items) {
    for (std::int64_t c = 0; c < it.multiplicity; ++c) out.items.push_back({it.weight, it.profit});
  }
  return out;
}

PerturbedInstance perturb_profits(const Instance01& instance) {
  if (!is_ratio_sorted<Item01>(instance.items)) {
    throw PreconditionError("perturb_profits: instance must be sorted by ratio");
  }
  const auto n = static_cast<Int128>(instance.size());
  PerturbedInstance out;
  out.instance.capacity = instance.capacity;
  out.instance.items.reserve(instance.size());
  try {
    out.scale = checked_add(checked_mul(checked_mul(n, n), max_weight(instance)), 1);
    for (std::size_t i = 0; i < instance.size(); ++i) {
      const auto& it = instance.items[i];
      const Int128 tiebreak = static_cast<Int128>(instance.size() - 1 - i) * it.weight;
      const Int128 p = checked_add(checked_mul(out.scale, it.profit), tiebreak);
      if (p > kMaxProfit) throw OverflowError("perturbed profit above 2^95");
      out.instance.items.push_back({it.weight, p});
    }
  } catch (const OverflowError&) {
    throw OverflowError("perturb_profits: perturbed profits do not fit 95 bits for n = " +
                        std::to_string(instance.size()) + ", w_max = " + std::to_string(max_weight(instance)) +
                        "; reduce the number of items, w_max or p_max");
  }
  if (!has_strictly_decreasing_ratios<Item01>(out.instance.items)) {
    throw InvariantError("perturb_profits: ratios are not strictly decreasing after perturbation");
  }
  return out;
}

ReducedInstance reduce(const BoundedInstance& instance) {
  const BoundedInstance sorted = canonical_sort(instance);
  const TrimResult trimmed = trim_bounded(sorted);
  PerturbedInstance perturbed = perturb_profits(expand_to_01(trimmed));
  ReducedInstance out;
  out.original_n_bar = perturbed.instance.size();
  out.instance01 = std::move(perturbed.instance);
  out.committed_profit = trimmed.committed_profit;
  out.reduced_capacity = trimmed.reduced_capacity;
  out.scale = perturbed.scale;
  return out;
}

ExtProfit recover(ExtProfit value_perturbed, const ReducedInstance& reduced) {
  if (!(value_perturbed >= ExtProfit(0))) throw PreconditionError("recover: value must be finite and non-negative");
  return ExtProfit(value_perturbed.value() / reduced.scale) + ExtProfit(reduced.committed_profit);
}

ExtProfit solve_bounded(const BoundedInstance& instance, const SolveOptions& options) {
  validate(instance);
  if (total_weight(instance) <= instance.capacity) {
    if (options.stats != nullptr) *options.stats = SolveStats{};
    return ExtProfit(total_profit(instance));
  }
  const ReducedInstance reduced = reduce(instance);
  if (reduced.instance01.items.empty()) {
    if (options.stats != nullptr) *options.stats = SolveStats{};
    return ExtProfit(reduced.committed_profit);
  }
  return recover(solve_01_auto(reduced.instance01, options), reduced);
}

ExtProfit solve_01_perturbed(const Instance01& instance, const SolveOptions& options) {
  const Instance01 sorted = canonical_sort(instance);
  if (total_weight(sorted) <= sorted.capacity) {
    if (options.stats != nullptr) *options.stats = SolveStats{};
    return ExtProfit(total_profit(sorted));
  }
  const PerturbedInstance perturbed = perturb_profits(sorted);
  const ExtProfit value = solve_01_auto(perturbed.instance, options);
  return ExtProfit(value.value() / perturbed.scale);
}

}  // namespace knapsack
