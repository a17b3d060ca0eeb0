#include "knapsack/proximity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace knapsack {
namespace {

constexpr Int128 kDeltaSaturation = static_cast<Int128>(1) << 120;

// Dense ids for the distinct weights of an instance, so per-step weight
// counting is an array lookup instead of a hash.
struct WeightIndex {
  std::vector<std::int64_t> distinct;  // ascending
  std::vector<std::uint32_t> id;       // per item

  explicit WeightIndex(const Instance01& instance) {
    distinct.reserve(instance.size());
    for (const auto& it : instance.items) distinct.push_back(it.weight);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    id.reserve(instance.size());
    for (const auto& it : instance.items) {
      id.push_back(static_cast<std::uint32_t>(
          std::lower_bound(distinct.begin(), distinct.end(), it.weight) - distinct.begin()));
    }
  }
};

struct StepScratch {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint32_t> touched;
  std::vector<char> mark;

  explicit StepScratch(std::size_t distinct) : counts(distinct, 0), mark(distinct, 0) {}
};

std::pair<Part, SingleStepState> step(const Instance01& instance, const PrefixSolution& g,
                                      std::span<const std::size_t> live, const WeightIndex& index,
                                      StepScratch& scratch, std::uint64_t log43_n,
                                      const PartitionOptions& options) {
  if (live.empty()) throw PreconditionError("single_step: live set U must be non-empty");

  scratch.touched.clear();
  std::uint64_t max_count = 0;
  for (std::size_t i : live) {
    if (i >= instance.size()) throw PreconditionError("single_step: index out of range");
    const std::uint32_t w = index.id[i];
    if (scratch.counts[w]++ == 0) scratch.touched.push_back(w);
    max_count = std::max(max_count, scratch.counts[w]);
  }

  SingleStepState st;
  st.m = std::bit_ceil(max_count);
  std::sort(scratch.touched.begin(), scratch.touched.end());
  for (std::uint32_t w : scratch.touched) {
    if (std::bit_ceil(scratch.counts[w]) == st.m) {
      scratch.mark[w] = 1;
      st.weight_class.push_back(index.distinct[w]);
    }
  }

  for (std::size_t i : live) {
    if (scratch.mark[index.id[i]] == 0) continue;
    st.j_all.push_back(i);
    (g.picks(i) ? st.j_minus : st.j_plus).push_back(i);
  }
  const std::size_t take_minus = (st.j_minus.size() + 1) / 2;
  const std::size_t take_plus = (st.j_plus.size() + 1) / 2;
  st.i_minus.assign(st.j_minus.begin(), st.j_minus.begin() + static_cast<std::ptrdiff_t>(take_minus));
  st.i_plus.assign(st.j_plus.end() - static_cast<std::ptrdiff_t>(take_plus), st.j_plus.end());

  Part part;
  if (st.i_minus.size() > st.i_plus.size()) {
    part.indices = st.i_minus;
    part.side = Side::kPicked;
  } else {
    part.indices = st.i_plus;
    part.side = Side::kUnpicked;
  }

  for (std::uint32_t w : scratch.touched) scratch.mark[w] = 0;
  for (std::size_t i : part.indices) {
    const std::uint32_t w = index.id[i];
    if (scratch.mark[w] == 0) {
      scratch.mark[w] = 1;
      ++part.support;
    }
  }
  for (std::uint32_t w : scratch.touched) {
    scratch.mark[w] = 0;
    scratch.counts[w] = 0;
  }

  const std::int64_t w_max = index.distinct.back();
  part.proximity_delta = proximity_delta(instance.size(), st.m, w_max, part.indices.size(),
                                 options.delta_constant.value_or(kDeltaConstant));
  part.delta = part.proximity_delta;
  st.potential = static_cast<std::uint64_t>(std::countr_zero(st.m)) * 2 * log43_n +
                 ceil_log_4_3(st.j_all.size());
  return {std::move(part), std::move(st)};
}

void check_step(const Part& part, const SingleStepState& st, std::size_t n, std::int64_t w_max,
                std::uint64_t previous_potential, bool first) {
  if (4 * part.indices.size() < st.j_all.size()) {
    throw InvariantError("partition: |I| < |J|/4");
  }
  if (!first && st.potential >= previous_potential) {
    throw InvariantError("partition: potential did not decrease (" + std::to_string(st.potential) +
                         " >= " + std::to_string(previous_potential) + ")");
  }
  const long double product = static_cast<long double>(part.support) * static_cast<long double>(part.proximity_delta);
  if (product > product_bound(n, w_max)) {
    throw InvariantError("partition: support * delta exceeds the product bound");
  }
}

}  // namespace

std::uint64_t ceil_log_4_3(std::uint64_t x) {
  if (x == 0) throw PreconditionError("ceil_log_4_3: argument must be >= 1");
  using boost::multiprecision::cpp_int;
  // (4/3)^e >= x  <=>  4^e >= x * 3^e
  cpp_int four = 1;
  cpp_int rhs = x;
  std::uint64_t e = 0;
  while (four < rhs) {
    four *= 4;
    rhs *= 3;
    ++e;
  }
  return e;
}

Int128 proximity_delta(std::size_t n, std::uint64_t m, std::int64_t w_max, std::size_t chosen_size,
                   long double constant) {
  if (n == 0 || chosen_size == 0) throw PreconditionError("proximity_delta: n and |I| must be positive");
  using boost::multiprecision::cpp_int;
  using Real = boost::multiprecision::cpp_bin_float_50;
  const Real c(constant);
  const Real scale = Real(m) * Real(w_max) * Real(w_max);
  cpp_int ceiled;
  const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
  if (std::has_single_bit(two_n) && c == boost::multiprecision::floor(c)) {
    // log2(2n) is an integer: evaluate exactly.
    const cpp_int l = std::bit_width(two_n) - 1;
    const cpp_int num = cpp_int(c) * l * l * l * cpp_int(m) * cpp_int(w_max) * cpp_int(w_max);
    ceiled = (num + chosen_size - 1) / chosen_size;
  } else {
    const Real log_term = boost::multiprecision::log2(Real(two_n));
    ceiled = cpp_int(boost::multiprecision::ceil(c * log_term * log_term * log_term * scale / Real(chosen_size)));
  }
  if (ceiled >= cpp_int(1) << 120) return kDeltaSaturation;
  const auto high = static_cast<std::uint64_t>(ceiled >> 64);
  const auto low = static_cast<std::uint64_t>(ceiled & std::numeric_limits<std::uint64_t>::max());
  return std::max<Int128>((static_cast<Int128>(high) << 64) | low, 1);
}

long double product_bound(std::size_t n, std::int64_t w_max) {
  const long double log_term = std::log2(2.0L * static_cast<long double>(n));
  const long double w = static_cast<long double>(w_max);
  return kProductConstant * log_term * log_term * log_term * w * w;
}

std::pair<Part, SingleStepState> single_step(const Instance01& instance, const PrefixSolution& g,
                                             std::span<const std::size_t> live, const PartitionOptions& options) {
  if (live.empty()) throw PreconditionError("single_step: live set U must be non-empty");
  const WeightIndex index(instance);
  StepScratch scratch(index.distinct.size());
  return step(instance, g, live, index, scratch, ceil_log_4_3(instance.size()), options);
}

Part cap_delta(Part part, const Instance01& instance) {
  const Int128 w_max = max_weight(instance);
  const Int128 classic = (2 * w_max - 1) * w_max;
  Int128 part_weight = 0;
  for (std::size_t i : part.indices) part_weight += instance.items[i].weight;
  part.delta = std::min({part.proximity_delta, classic, part_weight});
  return part;
}

std::uint64_t potential(std::span<const std::size_t> live, const Instance01& instance) {
  return single_step(instance, maximal_prefix_01(instance), live).second.potential;
}

std::vector<Part> partition(const Instance01& instance, const PrefixSolution& g, const PartitionOptions& options,
                            std::vector<SingleStepState>* steps) {
  const std::size_t n = instance.size();
  if (n == 0) throw PreconditionError("partition: instance must be non-empty");
  if (!has_strictly_decreasing_ratios<Item01>(instance.items)) {
    throw PreconditionError("partition: profit-to-weight ratios must be strictly decreasing");
  }

  const WeightIndex index(instance);
  const std::int64_t w_max = index.distinct.back();
  StepScratch scratch(index.distinct.size());
  const std::uint64_t log43_n = ceil_log_4_3(n);

  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  std::vector<std::size_t> next;

  std::vector<Part> parts;
  std::uint64_t previous_potential = 0;
  while (!live.empty()) {
    auto [part, st] = step(instance, g, live, index, scratch, log43_n, options);
    if (options.check_invariants) {
      check_step(part, st, n, w_max, previous_potential, parts.empty());
    }
    previous_potential = st.potential;

    next.clear();
    std::set_difference(live.begin(), live.end(), part.indices.begin(), part.indices.end(),
                        std::back_inserter(next));
    live.swap(next);
    parts.push_back(std::move(part));
    if (steps != nullptr) steps->push_back(std::move(st));
  }

  if (options.check_invariants) {
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (const auto& p : parts) {
      for (std::size_t i : p.indices) {
        if (seen[i] != 0) throw InvariantError("partition: parts overlap");
        seen[i] = 1;
        ++covered;
      }
    }
    if (covered != n) throw InvariantError("partition: parts do not cover all items");
    if (parts.size() > part_count_bound(n)) throw InvariantError("partition: too many parts");
  }
  return parts;
}

std::uint64_t part_count_bound(std::size_t n) {
  if (n == 0) return 0;
  const auto log2_2n = static_cast<std::uint64_t>(std::bit_width(2 * n - 1));  // ceil(log2(2n))
  return 2 * log2_2n * ceil_log_4_3(n) + 1;
}

}  // namespace knapsack
