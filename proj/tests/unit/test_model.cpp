#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "knapsack/ext_profit.hpp"
#include "knapsack/model.hpp"
#include "support/random_instances.hpp"

using namespace knapsack;
using knapsack::testing::Rng;

TEST_CASE("ExtProfit: NEG_INF is absorbing and minimal") {
  const ExtProfit a = 5;
  CHECK((kNegInf + a).is_neg_inf());
  CHECK((a + kNegInf).is_neg_inf());
  CHECK((kNegInf + kNegInf).is_neg_inf());
  CHECK(kNegInf < ExtProfit(kInt128Min + 1));
  CHECK(max(kNegInf, ExtProfit(-7)) == ExtProfit(-7));
  CHECK_THROWS_AS(-kNegInf, PreconditionError);
}

TEST_CASE("ExtProfit: overflow is a hard error") {
  CHECK_THROWS_AS(ExtProfit(kInt128Max) + ExtProfit(1), OverflowError);
  CHECK_THROWS_AS(ExtProfit(kInt128Min + 1) + ExtProfit(-1), OverflowError);
  CHECK_THROWS_AS(checked_mul(kInt128Max / 2 + 1, 2), OverflowError);
  CHECK((ExtProfit(kInt128Max) + ExtProfit(-1)).value() == kInt128Max - 1);
}

TEST_CASE("ExtProfit: addition is associative on random triples") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    auto pick = [&]() -> ExtProfit {
      if (rng.uniform(0, 5) == 0) return kNegInf;
      return ExtProfit(static_cast<Int128>(rng.uniform(-(1LL << 62), 1LL << 62)) << 40);
    };
    const ExtProfit a = pick();
    const ExtProfit b = pick();
    const ExtProfit c = pick();
    CHECK((a + b) + c == a + (b + c));
    if (a.is_neg_inf() || b.is_neg_inf() || c.is_neg_inf()) CHECK((a + b + c).is_neg_inf());
  }
}

TEST_CASE("Int128 decimal round trip") {
  for (Int128 v : {Int128{0}, Int128{-1}, Int128{42}, kInt128Max, kInt128Min, kMaxProfit}) {
    CHECK(parse_int128(to_string(v)) == v);
  }
  CHECK(to_string(kInt128Max) == "170141183460469231731687303715884105727");
  CHECK_THROWS(parse_int128("170141183460469231731687303715884105728"));
  CHECK_THROWS(parse_int128("12a"));
  CHECK_THROWS(parse_int128("-"));
  CHECK(to_string(kNegInf) == "-inf");
}

TEST_CASE("canonical_sort: cross-multiplication decides the order") {
  Instance01 in{{{3, 4}, {2, 3}}, 5};
  const auto sorted = canonical_sort(in);
  REQUIRE(sorted.items.size() == 2);
  CHECK(sorted.items[0] == Item01{2, 3});
  CHECK(sorted.items[1] == Item01{3, 4});
}

TEST_CASE("canonical_sort: equal ratios keep input order") {
  Instance01 in{{{1, 2}, {2, 4}}, 5};
  CHECK(canonical_sort(in).items == in.items);
  Instance01 rev{{{2, 4}, {1, 2}}, 5};
  CHECK(canonical_sort(rev).items == rev.items);
}

TEST_CASE("canonical_sort: agrees with an exact rational oracle") {
  using boost::multiprecision::cpp_rational;
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Instance01 in;
    for (int i = 0; i < 100; ++i) in.items.push_back({rng.uniform(1, 50), rng.uniform(1, 50)});
    std::vector<std::pair<cpp_rational, std::size_t>> oracle;
    for (std::size_t i = 0; i < in.items.size(); ++i) {
      oracle.emplace_back(cpp_rational(static_cast<long long>(in.items[i].profit), in.items[i].weight), i);
    }
    std::sort(oracle.begin(), oracle.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    const auto sorted = canonical_sort(in);
    for (std::size_t k = 0; k < oracle.size(); ++k) CHECK(sorted.items[k] == in.items[oracle[k].second]);
    CHECK(is_ratio_sorted<Item01>(sorted.items));
  }
}

TEST_CASE("validation rejects non-positive values") {
  CHECK_THROWS_AS(canonical_sort(Instance01{{{0, 1}}, 1}), ValidationError);
  CHECK_THROWS_AS(canonical_sort(Instance01{{{1, 0}}, 1}), ValidationError);
  CHECK_THROWS_AS(canonical_sort(Instance01{{{1, 1}}, -1}), ValidationError);
  CHECK_THROWS_AS(canonical_sort(BoundedInstance{{{1, 1, 0}}, 1}), ValidationError);
  CHECK_NOTHROW(canonical_sort(Instance01{{}, 0}));
}

TEST_CASE("maximal_prefix_01: definition cases") {
  SUBCASE("cut in the middle") {
    Instance01 in{{{2, 10}, {3, 9}, {4, 8}}, 6};
    const auto g = maximal_prefix_01(in);
    CHECK(g.cut == 2);
    CHECK(g.total_weight == 5);
    CHECK(g.total_profit == 19);
    CHECK(g.picks(0));
    CHECK(g.picks(1));
    CHECK_FALSE(g.picks(2));
  }
  SUBCASE("everything fits") {
    Instance01 in{{{2, 10}, {3, 9}}, 10};
    const auto g = maximal_prefix_01(in);
    CHECK(g.cut == 2);
    CHECK(g.total_weight == 5);
  }
  SUBCASE("empty and zero capacity") {
    CHECK(maximal_prefix_01(Instance01{{}, 3}).cut == 0);
    CHECK(maximal_prefix_01(Instance01{{{1, 1}}, 0}).total_weight == 0);
  }
}

TEST_CASE("maximal_prefix_01: feasible and maximal on random instances") {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto in = canonical_sort(testing::random_instance01(rng, rng.uniform(0, 40), 30, 50, rng.real(0, 1)));
    const auto g = maximal_prefix_01(in);
    std::int64_t w = 0;
    for (std::size_t i = 0; i < g.cut; ++i) w += in.items[i].weight;
    CHECK(w == g.total_weight);
    CHECK(w <= in.capacity);
    if (g.cut < in.size()) {
      CHECK(w + in.items[g.cut].weight > in.capacity);
      CHECK(w > in.capacity - max_weight(in));
    }
  }
}

TEST_CASE("maximal_prefix_bounded: partial count formula") {
  SUBCASE("single item, not exhausted") {
    BoundedInstance in{{{2, 3, 5}}, 9};
    const auto g = maximal_prefix_bounded(in);
    CHECK(g.cut == 0);
    CHECK(g.bounded_partial == 4);
    CHECK(g.total_weight == 8);
    CHECK(g.total_profit == 12);
  }
  SUBCASE("all fit") {
    BoundedInstance in{{{2, 5, 1}, {3, 6, 1}}, 10};
    const auto g = maximal_prefix_bounded(in);
    CHECK(g.cut == 2);
    CHECK(g.copies(0, 1) == 1);
    CHECK(g.copies(1, 1) == 1);
  }
}

TEST_CASE("maximal_prefix_bounded: feasible and maximal on random instances") {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto in = canonical_sort(testing::random_bounded(rng, rng.uniform(0, 30), 30, 50, 20, rng.real(0, 1)));
    const auto g = maximal_prefix_bounded(in);
    Int128 w = 0;
    for (std::size_t i = 0; i < in.size(); ++i) w += static_cast<Int128>(in.items[i].weight) * g.copies(i, in.items[i].multiplicity);
    CHECK(w == g.total_weight);
    CHECK(w <= in.capacity);
    if (g.cut < in.size()) {
      CHECK(g.bounded_partial < in.items[g.cut].multiplicity);
      CHECK(w + in.items[g.cut].weight > in.capacity);
    }
  }
}
