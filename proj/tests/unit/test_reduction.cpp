#include <doctest.h>

#include <chrono>
#include <map>

#include "knapsack/oracles.hpp"
#include "knapsack/reduction.hpp"
#include "support/random_instances.hpp"

using namespace knapsack;
using knapsack::testing::Rng;

TEST_CASE("trim_bounded: single item hand trace") {
  const BoundedInstance in{{{1, 1, 10}}, 5};
  const auto t = trim_bounded(in);
  CHECK(t.committed == std::vector<std::int64_t>{3});
  CHECK(t.removed == std::vector<std::int64_t>{3});
  CHECK(t.committed_profit == 3);
  CHECK(t.reduced_capacity == 2);
  REQUIRE(t.trimmed.items.size() == 1);
  CHECK(t.trimmed.items[0].multiplicity == 4);
  CHECK(bellman_bounded(t.trimmed) + ExtProfit(t.committed_profit) == bellman_bounded(in));
  CHECK(bellman_bounded(in) == ExtProfit(5));
}

TEST_CASE("trim_bounded: small classes are left alone") {
  const BoundedInstance in = canonical_sort(BoundedInstance{{{3, 9, 2}, {3, 5, 3}, {2, 1, 1}}, 7});
  const auto t = trim_bounded(in);
  CHECK(t.committed_profit == 0);
  CHECK(t.reduced_capacity == 7);
  CHECK(t.trimmed.items == in.items);
}

TEST_CASE("trim_bounded: requires ratio order") {
  CHECK_THROWS_AS(trim_bounded(BoundedInstance{{{3, 1, 1}, {1, 5, 1}}, 2}), PreconditionError);
}

TEST_CASE("trim_bounded: value preserved and class sizes bounded on random instances") {
  Rng rng(606);
  for (int trial = 0; trial < 300; ++trial) {
    const auto in = canonical_sort(testing::random_bounded(rng, static_cast<std::size_t>(rng.uniform(1, 15)),
                                                           rng.uniform(1, 8), 50, 50, rng.real(0.05, 1.0)));
    const auto t = trim_bounded(in);
    std::map<std::int64_t, std::int64_t> per_class;
    for (const auto& it : t.trimmed.items) per_class[it.weight] += it.multiplicity;
    for (auto [w, c] : per_class) CHECK(c <= 4 * t.w_max);
    CHECK(bellman_bounded(t.trimmed) + ExtProfit(t.committed_profit) == bellman_bounded(in));
  }
}

TEST_CASE("expand_to_01: copies in order") {
  TrimResult t;
  t.w_max = 2;
  t.trimmed = BoundedInstance{{{2, 3, 3}, {1, 1, 1}}, 4};
  const auto e = expand_to_01(t);
  CHECK(e.items == std::vector<Item01>{{2, 3}, {2, 3}, {2, 3}, {1, 1}});
  CHECK(e.capacity == 4);

  t.trimmed.items[0].multiplicity = 20;
  CHECK_THROWS_AS(expand_to_01(t), InvariantError);
}

TEST_CASE("perturb_profits: formula examples") {
  const auto a = perturb_profits(Instance01{{{2, 3}, {3, 4}}, 4});
  CHECK(a.scale == 13);
  CHECK(a.instance.items == std::vector<Item01>{{2, 41}, {3, 52}});

  const auto b = perturb_profits(Instance01{{{1, 2}, {2, 4}}, 4});
  CHECK(b.scale == 9);
  CHECK(b.instance.items == std::vector<Item01>{{1, 19}, {2, 36}});
  CHECK(has_strictly_decreasing_ratios<Item01>(b.instance.items));

  CHECK_THROWS_AS(perturb_profits(Instance01{{{2, 1}, {1, 5}}, 1}), PreconditionError);
  CHECK_THROWS_AS(perturb_profits(Instance01{{{1, kMaxProfit}, {1, kMaxProfit}}, 1}), OverflowError);
}

TEST_CASE("perturb_profits: optimum is preserved by floor division") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    // Small profits and weights make ratio ties common.
    const auto in = canonical_sort(
        testing::random_instance01(rng, static_cast<std::size_t>(rng.uniform(1, 20)), 4, 6, rng.real(0.1, 0.9)));
    const auto p = perturb_profits(in);
    CHECK(has_strictly_decreasing_ratios<Item01>(p.instance.items));
    CHECK(ExtProfit(bellman_01(p.instance).value() / p.scale) == bellman_01(in));
  }
}

TEST_CASE("recover: division plus committed profit") {
  ReducedInstance r;
  r.scale = 13;
  CHECK(recover(52, r) == ExtProfit(4));
  r.scale = 1000;
  r.committed_profit = 7;
  CHECK(recover(0, r) == ExtProfit(7));
  CHECK_THROWS_AS(recover(kNegInf, r), PreconditionError);
}

TEST_CASE("solve_bounded: hand instances") {
  CHECK(solve_bounded(BoundedInstance{{{2, 3, 5}}, 9}) == ExtProfit(12));
  CHECK(solve_bounded(BoundedInstance{{}, 9}) == ExtProfit(0));
  CHECK(solve_bounded(BoundedInstance{{{1, 1, 10}}, 5}) == ExtProfit(5));
  CHECK(solve_bounded(BoundedInstance{{{2, 3, 5}, {3, 5, 2}}, 0}) == ExtProfit(0));
}

TEST_CASE("solve_bounded: equals the Bellman table on random instances") {
  Rng rng(1618);
  for (int trial = 0; trial < 400; ++trial) {
    const auto in = testing::random_bounded(rng, static_cast<std::size_t>(rng.uniform(1, 30)), rng.uniform(1, 30),
                                            100, 20, rng.real(0.1, 1.0));
    REQUIRE(solve_bounded(in) == bellman_bounded(in));
  }
}

TEST_CASE("solve_bounded: huge multiplicities cost nothing extra") {
  Rng rng(77);
  BoundedInstance in = testing::random_bounded(rng, 200, 20, 100, 1, 0.5);
  for (auto& it : in.items) it.multiplicity = 1000000000;
  in.capacity = 1000000000LL * 20 * 30;
  const auto start = std::chrono::steady_clock::now();
  const ExtProfit v = solve_bounded(in);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 5.0);
  CHECK(v > ExtProfit(0));
  // Capacity beyond the total mass saturates at the total profit.
  in.capacity = static_cast<std::int64_t>(total_weight(in)) * 2;
  CHECK(solve_bounded(in) == ExtProfit(total_profit(in)));
}
