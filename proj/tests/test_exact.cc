#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.h"
#include "splitwise/errors.h"
#include "splitwise/exact.h"
#include "splitwise/generators.h"
#include "splitwise/greedy.h"
#include "test_util.h"

namespace splitwise {
namespace {

using testing::Uniform;

std::vector<int> Members(const HypothesisSet& H) { return H.ToVector(); }

TEST(PartialTree, SingletonIsBareLeaf) {
  const Instance inst = testing::SingletonTests3();
  for (int b : {0, 1, 5}) {
    const DecisionTree tree = PartialTree(inst, HypothesisSet::Of(3, {1}), b);
    EXPECT_EQ(tree.num_nodes(), 1);
    EXPECT_EQ(Cost(tree, inst, HypothesisSet::Of(3, {1})).total, Rational(0));
  }
}

TEST(PartialTree, ZeroDepthIsTruncatedLeaf) {
  const Instance inst = testing::SingletonTests3();
  const DecisionTree tree = PartialTree(inst, inst.AllHypotheses(), 0);
  EXPECT_EQ(tree.num_nodes(), 1);
  EXPECT_EQ(Cost(tree, inst).total, Rational(0));
}

TEST(PartialTree, SingletonTestsAtDepthTwo) {
  const Instance inst = testing::SingletonTests3();
  const DecisionTree tree = PartialTree(inst, inst.AllHypotheses(), 2);
  EXPECT_EQ(Cost(tree, inst).total, Rational(5, 3));
  EXPECT_TRUE(IsComplete(tree, inst, inst.AllHypotheses(), std::nullopt));
}

TEST(PartialTree, SymmetricTestsAtDepthOne) {
  // Each test isolates one hypothesis; every hypothesis sits at depth 1.
  const Instance inst = Uniform(4, 2, {{1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 1, 2}});
  const DecisionTree tree = PartialTree(inst, inst.AllHypotheses(), 1);
  EXPECT_EQ(tree.node(0).test, 0);
  EXPECT_EQ(Cost(tree, inst).total, Rational(1));
  EXPECT_TRUE(IsComplete(tree, inst, inst.AllHypotheses(), 1));
}

TEST(OptimalTree, TwoHypotheses) {
  const Instance inst = Uniform(2, 2, {{1, 2}});
  EXPECT_EQ(Cost(OptimalTree(inst), inst).total, Rational(1));
}

TEST(OptimalTree, PerfectSplitsMeetInformationBound) {
  const Instance inst = testing::PerfectSplits4();
  EXPECT_EQ(Cost(OptimalTree(inst), inst).total, Rational(2));
}

TEST(OptimalTree, SevenHypothesesMatchPlainRecursion) {
  RandomSpec spec;
  spec.n = 7;
  spec.m = 6;
  spec.seed = 17;
  const Instance inst = GenerateRandom(spec);
  const DecisionTree tree = OptimalTree(inst);
  EXPECT_EQ(Cost(tree, inst).depth_units, oracle::PlainOptimalCostUnits(inst));
  EXPECT_TRUE(IsComplete(tree, inst, inst.AllHypotheses(), std::nullopt));
}

TEST(OptimalTree, UndistinguishedPairThrows) {
  const Instance inst = Uniform(3, 2, {{1, 1, 2}});
  EXPECT_THROW(OptimalTree(inst), InvalidInstanceError);
}

TEST(OptimalTree, BudgetExceededCarriesStats) {
  RandomSpec spec;
  spec.n = 12;
  spec.m = 10;
  spec.seed = 5;
  const Instance inst = GenerateRandom(spec);
  SearchBudget budget;
  budget.max_expansions = 10;
  try {
    OptimalTree(inst, budget);
    FAIL();
  } catch (const BudgetExceededError& e) {
    EXPECT_GT(e.stats().expansions, 10);
  }
}

TEST(ExpansionEnvelope, Saturates) {
  EXPECT_EQ(ExpansionEnvelope(2, 2, 0), 1);
  EXPECT_EQ(ExpansionEnvelope(2, 2, 2), 1 + 4 + 16);
  EXPECT_EQ(ExpansionEnvelope(100, 3, 40), std::numeric_limits<std::int64_t>::max());
}

// Memo-backed search against the plain recursion, per b, plus monotonicity in
// b and the sandwich C_OPT(H,b) <= C_OPT(H) <= C_G(H).
TEST(PartialTree, MatchesPlainRecursionOnRandomInstances) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    RandomSpec spec;
    spec.n = 2 + trial % 6;
    spec.m = 3 + trial % 4;
    spec.k = 2 + trial % 2;
    spec.seed = 7000 + static_cast<std::uint64_t>(trial);
    spec.profile = static_cast<WeightProfile>(trial % 3);
    const Instance inst = GenerateRandom(spec);
    HypothesisSet H(spec.n);
    for (int h = 0; h < spec.n; ++h) {
      if (rng() % 4 != 0) H.insert(h);
    }
    if (H.empty()) H.insert(0);
    PartialTreeSolver solver(inst);
    const Weight full = oracle::PlainPartialCostUnits(inst, Members(H), H.size() - 1);
    const Weight greedy = Cost(BuildGreedyTree(inst, H), inst, H).depth_units;
    Weight previous = -1;
    for (int b = 0; b <= 4; ++b) {
      const Weight expected = oracle::PlainPartialCostUnits(inst, Members(H), b);
      ASSERT_EQ(solver.MinCostUnits(H, b), expected) << "trial " << trial << " b " << b;
      const DecisionTree tree = PartialTree(inst, H, b);
      EXPECT_EQ(Cost(tree, inst, H).depth_units, expected);
      EXPECT_TRUE(IsComplete(tree, inst, H, b));
      EXPECT_LE(tree.height(), b);
      if (previous >= 0) {
        EXPECT_LE(previous, expected);
      }
      previous = expected;
      EXPECT_LE(expected, full);
      if (b >= H.size() - 1) {
        EXPECT_EQ(expected, full);
      }
    }
    EXPECT_LE(full, greedy);
    EXPECT_LE(solver.stats().expansions, ExpansionEnvelope(spec.m, spec.k, 4));
  }
}

TEST(PartialTree, TieBreakPicksSmallestRootTest) {
  // Tests 0 and 1 induce the same partition; test 2 another perfect split.
  const Instance inst = Uniform(4, 2, {{1, 1, 2, 2}, {2, 2, 1, 1}, {1, 2, 1, 2}});
  const DecisionTree tree = OptimalTree(inst);
  EXPECT_EQ(tree.node(0).test, 0);
  EXPECT_EQ(Cost(tree, inst).total, Rational(2));
}

TEST(PartialTree, Deterministic) {
  RandomSpec spec;
  spec.n = 9;
  spec.m = 8;
  spec.k = 3;
  spec.seed = 44;
  spec.profile = WeightProfile::kSkewed;
  const Instance inst = GenerateRandom(spec);
  EXPECT_EQ(OptimalTree(inst), OptimalTree(inst));
}

}  // namespace
}  // namespace splitwise
