#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "rbu/error.hpp"
#include "rbu/undersampling.hpp"
#include "support.hpp"

namespace rbu {
namespace {

using testing::task_from;

TEST(Rbu, ZeroRatioKeepsEverything) {
  std::mt19937_64 rng(1);
  const BinaryTask t = testing::random_task(rng, 20, 5, 3);
  const RbuResult r = rbu_undersample(t, RbuParams{0.5, 0.0});
  EXPECT_TRUE(r.removed.empty());
  EXPECT_EQ(r.kept.size(), 20u);
}

TEST(Rbu, AlreadyBalancedIsUnchanged) {
  std::mt19937_64 rng(2);
  const BinaryTask t = testing::random_task(rng, 6, 6, 2);
  const BinaryTask out = rbu(t, RbuParams{1.0, 1.0});
  EXPECT_EQ(out.majority, t.majority);
}

TEST(Rbu, HandTraceOracle) {
  const BinaryTask t = task_from(Matrix{{0, 0}, {0.1, 0}, {2, 0}}, Matrix{{2.1, 0}});
  const RbuResult r = rbu_undersample(t, RbuParams{1.0, 1.0});
  ASSERT_EQ(r.removed, (std::vector<std::size_t>{1, 0}));
  EXPECT_NEAR(r.removed_potential[0], 1.9987860417267843, 1e-14);
  EXPECT_NEAR(r.removed_potential[1], 1.0061604605588192, 1e-14);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{2}));
  const BinaryTask out = rbu(t, RbuParams{1.0, 1.0});
  EXPECT_EQ(out.majority, (Matrix{{2, 0}}));
  EXPECT_EQ(out.majority_source, (std::vector<std::size_t>{2}));
  EXPECT_EQ(out.minority, t.minority);
}

TEST(Rbu, FractionalThresholdRemovesItsCeiling) {
  std::mt19937_64 rng(3);
  const BinaryTask t = testing::random_task(rng, 10, 3, 2);
  EXPECT_EQ(rbu_undersample(t, RbuParams{0.5, 0.5}).removed.size(), 4u);  // 3.5 -> 4
}

TEST(Rbu, ParameterValidation) {
  std::mt19937_64 rng(4);
  const BinaryTask t = testing::random_task(rng, 10, 3, 2);
  EXPECT_THROW(rbu_undersample(t, RbuParams{0.0, 1.0}), ParameterError);
  EXPECT_THROW(rbu_undersample(t, RbuParams{1.0, 1.5}), ParameterError);
  EXPECT_THROW(rbu_undersample(t, RbuParams{1.0, -0.1}), ParameterError);
  BinaryTask empty_minority = task_from(Matrix{{0}}, Matrix(0, 1));
  EXPECT_THROW(rbu_undersample(empty_minority, RbuParams{}), DataError);
}

TEST(RbuProperty, CardinalityAndSubset) {
  std::mt19937_64 rng(5);
  const double ratios[] = {0.0, 0.2, 0.5, 0.75, 1.0};
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryTask t = testing::random_sized_task(rng, 60, 20, 4);
    const double ratio = ratios[rng() % 5];
    const BinaryTask out = rbu(t, RbuParams{0.5, ratio});
    const std::size_t expected = t.n_majority() - balancing_count(ratio, t.n_majority(), t.n_minority());
    ASSERT_EQ(out.n_majority(), expected);
    EXPECT_TRUE(std::is_sorted(out.majority_source.begin(), out.majority_source.end()));
    for (std::size_t i = 0; i < out.n_majority(); ++i) {
      const std::size_t src = out.majority_source[i];
      EXPECT_TRUE(std::equal(out.majority.row(i).begin(), out.majority.row(i).end(), t.majority.row(src).begin()));
    }
    EXPECT_EQ(out.minority, t.minority);
    if (ratio == 1.0) {
      EXPECT_EQ(out.n_majority(), out.n_minority());
    }
  }
}

TEST(RbuProperty, MatchesNaiveRecomputation) {
  std::mt19937_64 rng(6);
  const double gammas[] = {0.01, 0.1, 1.0, 10.0};
  for (int trial = 0; trial < 60; ++trial) {
    const BinaryTask t = testing::random_sized_task(rng, 100, 30, 5);
    const double gamma = gammas[rng() % 4];
    const double ratio = rng() % 2 ? 1.0 : 0.5;
    const RbuResult fast = rbu_undersample(t, RbuParams{gamma, ratio});
    const auto slow = testing::naive_rbu(t, gamma, ratio);
    ASSERT_EQ(fast.removed.size(), slow.size());
    for (std::size_t s = 0; s < slow.size(); ++s) {
      ASSERT_EQ(fast.removed[s], slow[s].index) << "step " << s;
      EXPECT_NEAR(fast.removed_potential[s], slow[s].potential, 1e-9);
    }
  }
}

TEST(RbuProperty, DeterministicUnderSeed) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const BinaryTask t = testing::random_sized_task(rng, 50, 10, 3);
    const RbuParams p{0.3, 1.0, TieRule::seeded_random, 99};
    EXPECT_EQ(rbu(t, p).majority, rbu(t, p).majority);
  }
}

TEST(Rbu, SeededTiesOnDuplicatedPoints) {
  // Identical majority points tie exactly; the random rule may remove any of them.
  const BinaryTask t = task_from(Matrix{{0}, {0}, {0}, {0}}, Matrix{{5}});
  EXPECT_EQ(rbu_undersample(t, RbuParams{1.0, 1.0}).removed, (std::vector<std::size_t>{0, 1, 2}));
  bool other = false;
  for (std::uint64_t seed = 0; seed < 20 && !other; ++seed) {
    other = rbu_undersample(t, RbuParams{1.0, 1.0, TieRule::seeded_random, seed}).removed !=
            std::vector<std::size_t>{0, 1, 2};
  }
  EXPECT_TRUE(other);
}

}  // namespace
}  // namespace rbu
