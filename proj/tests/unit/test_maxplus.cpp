#include <doctest.h>

#include "knapsack/maxplus.hpp"
#include "support/random_instances.hpp"

using namespace knapsack;
using knapsack::testing::Rng;

namespace {

ProfitSeq seq(std::initializer_list<ExtProfit> v) { return ProfitSeq(v); }

}  // namespace

TEST_CASE("conv_concave: small hand example") {
  ConcaveSeq y{seq({0, 2, 3}), 1, 2};
  CHECK(conv_concave(seq({0, 1}), y) == seq({0, 2, 3, 4}));
}

TEST_CASE("conv_concave: count 0 is the identity") {
  ConcaveSeq y{seq({0}), 1, 0};
  const ProfitSeq x = seq({0, kNegInf, 3, -2});
  CHECK(conv_concave(x, y) == x);
}

TEST_CASE("conv_concave: offset > 1 with NEG_INF gaps") {
  ConcaveSeq y{seq({0, kNegInf, 5, kNegInf, 9, kNegInf}), 2, 2};
  const ProfitSeq x = seq({0, 1, kNegInf});
  CHECK(conv_concave(x, y) == conv_naive(x, y.seq));
}

TEST_CASE("conv_concave: rejects non-concave input") {
  CHECK_THROWS_AS(conv_concave(seq({0}), ConcaveSeq{seq({0, 1, 3}), 1, 2}), PreconditionError);
  CHECK_THROWS_AS(conv_concave(seq({0}), ConcaveSeq{seq({0, 1, 2}), 2, 1}), PreconditionError);
  CHECK_THROWS_AS(conv_concave(seq({0}), ConcaveSeq{seq({0, kNegInf, 2}), 1, 2}), PreconditionError);
  CHECK_THROWS_AS(conv_concave(seq({0}), ConcaveSeq{seq({0}), 0, 0}), PreconditionError);
}

TEST_CASE("conv_concave: truncated output equals a prefix of the full result") {
  Rng rng(5);
  const ProfitSeq x = testing::random_sequence(rng, 50, 100, 0.3);
  const ConcaveSeq y = testing::random_concave(rng, 3, 10, 4, 20);
  const ProfitSeq full = conv_concave(x, y);
  const ProfitSeq cut = conv_concave(x, y, 17);
  REQUIRE(cut.size() == 17);
  CHECK(std::equal(cut.begin(), cut.end(), full.begin()));
}

TEST_CASE("conv_concave: matches conv_naive on random pairs") {
  Rng rng(4242);
  std::uint64_t evals = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto h = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto lenx = static_cast<std::size_t>(rng.uniform(1, 300));
    const auto ell = static_cast<std::size_t>(rng.uniform(0, 300 / h - 1));
    const auto pad = static_cast<std::size_t>(rng.uniform(0, h - 1));
    const ProfitSeq x = testing::random_sequence(rng, lenx, 1000, rng.real(0, 0.6));
    const ConcaveSeq y = testing::random_concave(rng, h, ell, pad, 40);
    evals = 0;
    const ProfitSeq z = conv_concave(x, y, kFullLength, &evals);
    CHECK(z == conv_naive(x, y.seq));
    CHECK(z[0] == x[0] + y.seq[0]);
    // Per residue SMAWK runs over (rows + cols) <= (|z| + |x|) / h + 2.
    CHECK(evals <= 8 * (z.size() + x.size() + 2 * h));
  }
}

TEST_CASE("conv_naive: hand examples and commutativity") {
  CHECK(conv_naive(seq({0}), seq({0, 5})) == seq({0, 5}));
  CHECK(conv_naive(seq({0, kNegInf, 3}), seq({0, 1})) == seq({0, 1, 3, 4}));
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const ProfitSeq a = testing::random_sequence(rng, static_cast<std::size_t>(rng.uniform(1, 40)), 50, 0.3);
    const ProfitSeq b = testing::random_sequence(rng, static_cast<std::size_t>(rng.uniform(1, 40)), 50, 0.3);
    CHECK(conv_naive(a, b) == conv_naive(b, a));
  }
}

TEST_CASE("prefix_max") {
  CHECK(prefix_max(seq({0, 5, 3, kNegInf, 7})) == seq({0, 5, 5, 5, 7}));
  CHECK(prefix_max(seq({4, kNegInf, kNegInf})) == seq({4, 4, 4}));
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const ProfitSeq x = testing::random_sequence(rng, static_cast<std::size_t>(rng.uniform(1, 60)), 100, 0.4);
    const ProfitSeq s = prefix_max(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(s[i] >= x[i]);
      if (i > 0) CHECK(s[i] >= s[i - 1]);
    }
    CHECK(prefix_max(s) == s);
  }
}
