#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "oracles.h"
#include "splitwise/errors.h"
#include "splitwise/greedy.h"
#include "splitwise/mssc.h"
#include "test_util.h"

namespace splitwise {
namespace {

SetSystem Weighted(std::vector<Weight> units, std::vector<HypothesisSet> sets) {
  SetSystem s;
  s.denominator = 0;
  for (Weight u : units) s.denominator += u;
  s.element_units = std::move(units);
  s.sets = std::move(sets);
  return s;
}

// a, b, c as 0, 1, 2.
SetSystem Abc() {
  return MakeUniformSetSystem(3, {HypothesisSet::Of(3, {0, 1}), HypothesisSet::Of(3, {1, 2}), HypothesisSet::Of(3, {2})});
}

SetSystem RandomSystem(std::mt19937_64& rng, int universe, int sets, bool weighted) {
  std::uniform_int_distribution<Weight> weight(1, weighted ? 9 : 1);
  std::vector<Weight> units;
  for (int e = 0; e < universe; ++e) units.push_back(weight(rng));
  std::vector<HypothesisSet> family;
  for (int j = 0; j < sets; ++j) {
    HypothesisSet s(universe);
    for (int e = 0; e < universe; ++e) {
      if (rng() % 3 == 0) s.insert(e);
    }
    family.push_back(std::move(s));
  }
  SetSystem system = Weighted(std::move(units), std::move(family));
  system.Uncoverable().ForEach([&](int e) { system.sets[rng() % static_cast<std::size_t>(sets)].insert(e); });
  return system;
}

TEST(MsscCost, SingleElement) {
  const SetSystem s = MakeUniformSetSystem(1, {HypothesisSet::Of(1, {0})});
  EXPECT_EQ(MsscCost(s, {{0}}), Rational(1));
}

TEST(MsscCost, TwoSingletons) {
  const SetSystem s = MakeUniformSetSystem(2, {HypothesisSet::Of(2, {0}), HypothesisSet::Of(2, {1})});
  EXPECT_EQ(MsscCost(s, {{0, 1}}), Rational(3, 2));
}

TEST(MsscCost, UncoveredElementIsReported) {
  const SetSystem s = MakeUniformSetSystem(2, {HypothesisSet::Of(2, {0}), HypothesisSet::Of(2, {1})});
  try {
    MsscCost(s, {{0}});
    FAIL();
  } catch (const UncoveredError& e) {
    EXPECT_EQ(e.residue().ToVector(), std::vector<int>{1});
  }
}

TEST(MsscCost, FormulasAgreeOnRandomOrders) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const SetSystem s = RandomSystem(rng, 2 + trial % 7, 2 + trial % 5, trial % 2 == 1);
    std::vector<int> order(static_cast<std::size_t>(s.num_sets()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const MsscSolution sol{order};
    EXPECT_EQ(MsscCostUnitsPrefixSum(s, sol), MsscCostUnitsCoverTime(s, sol));
    EXPECT_EQ(MsscCostUnitsCoverTime(s, sol), oracle::CoverTimeUnits(s, order));
  }
}

TEST(MsscGreedy, OverlappingSets) {
  const SetSystem s = Abc();
  const MsscSolution g = MsscGreedy(s);
  EXPECT_EQ(g.order, (std::vector<int>{0, 1}));
  EXPECT_EQ(MsscCost(s, g), Rational(4, 3));
  EXPECT_TRUE(IsGreedySolution(s, g));
}

TEST(MsscGreedy, DisjointSingletonsKeepIndexOrder) {
  const SetSystem s =
      MakeUniformSetSystem(3, {HypothesisSet::Of(3, {0}), HypothesisSet::Of(3, {1}), HypothesisSet::Of(3, {2})});
  EXPECT_EQ(MsscGreedy(s).order, (std::vector<int>{0, 1, 2}));
}

TEST(MsscGreedy, WeightBeatsCount) {
  const SetSystem s = Weighted({6, 2, 2}, {HypothesisSet::Of(3, {1, 2}), HypothesisSet::Of(3, {0})});
  EXPECT_EQ(MsscGreedy(s).order.front(), 1);
}

TEST(MsscGreedy, CompletionKeepsPrefix) {
  const SetSystem s = Abc();
  const MsscSolution g = MsscGreedyCompletion(s, {2});
  EXPECT_EQ(g.order, (std::vector<int>{2, 0}));
  EXPECT_FALSE(IsGreedySolution(s, g));
}

TEST(MsscOptimal, SingleCoveringSet) {
  const SetSystem s = Weighted({1, 2, 3}, {HypothesisSet::Of(3, {0}), HypothesisSet::Full(3)});
  EXPECT_EQ(MsscCost(s, MsscOptimal(s)), Rational(1));
}

TEST(MsscOptimal, OverlappingSets) { EXPECT_EQ(MsscCost(Abc(), MsscOptimal(Abc())), Rational(4, 3)); }

TEST(MsscOptimal, MatchesPermutationOracleAndBoundsGreedy) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const SetSystem s = RandomSystem(rng, 2 + trial % 8, 2 + trial % 6, trial % 3 != 0);
    const Weight opt = MsscCostUnitsCoverTime(s, MsscOptimal(s));
    EXPECT_EQ(opt, oracle::PermutationMsscOptimumUnits(s));
    const Weight greedy = MsscCostUnitsCoverTime(s, MsscGreedy(s));
    EXPECT_EQ(greedy, oracle::GreedyMsscUnits(s));
    EXPECT_LE(greedy, 4 * opt);
  }
}

TEST(MsscOptimal, TooManySetsOverLargeUniverse) {
  std::vector<HypothesisSet> sets;
  for (int j = 0; j < 22; ++j) sets.push_back(HypothesisSet::Of(22, {j}));
  EXPECT_THROW(MsscOptimal(MakeUniformSetSystem(22, sets)), BudgetExceededError);
}

TEST(InducedMssc, RootChainUsesMinorityParts) {
  const Instance inst = testing::Uniform(4, 2, {{1, 2, 2, 2}, {1, 1, 2, 2}, {2, 2, 1, 2}});
  const DecisionTree tree = BuildGreedyTree(inst);
  const InducedMssc induced = BuildInducedMssc(inst, tree, {0});
  EXPECT_EQ(induced.instance.universe_size(), 4);
  EXPECT_EQ(induced.instance.num_sets(), 3 + 4);
  EXPECT_EQ(induced.instance.sets[0].ToVector(), std::vector<int>{0});
  // Even split: the majority is the larger answer, so hypotheses 0 and 1 form the minority.
  EXPECT_EQ(induced.instance.sets[1].ToVector(), (std::vector<int>{0, 1}));
  EXPECT_EQ(induced.instance.sets[2].ToVector(), std::vector<int>{2});
  for (int h = 0; h < 4; ++h) {
    EXPECT_EQ(induced.instance.sets[static_cast<std::size_t>(3 + h)].ToVector(), std::vector<int>{h});
  }
}

TEST(InducedMssc, SingletonsOutsideTheUniverseAreEmpty) {
  const Instance inst = testing::PerfectSplits4();
  const DecisionTree tree = BuildGreedyTree(inst);
  const int child = tree.node(0).children[1];
  const InducedMssc induced = BuildInducedMssc(inst, tree, {child});
  EXPECT_EQ(induced.hypothesis, (std::vector<int>{2, 3}));
  EXPECT_TRUE(induced.instance.sets[2].empty());
  EXPECT_TRUE(induced.instance.sets[3].empty());
  EXPECT_EQ(induced.instance.sets[4].ToVector(), std::vector<int>{0});
  EXPECT_EQ(induced.element[0], -1);
}

TEST(InducedMssc, RejectsNonPaths) {
  const Instance inst = testing::PerfectSplits4();
  const DecisionTree tree = BuildGreedyTree(inst);
  EXPECT_THROW(BuildInducedMssc(inst, tree, {}), Error);
  EXPECT_THROW(BuildInducedMssc(inst, tree, {tree.node(0).children[0], tree.node(0).children[1]}), Error);
}

TEST(ChainGreedySolution, ReadsChainTestsFirst) {
  const Instance inst = testing::Uniform(4, 2, {{1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 1, 2}});
  const DecisionTree tree = BuildGreedyTree(inst);
  const int next = MajorityChild(tree, 0);
  const std::vector<int> chain{0, next};
  const InducedMssc induced = BuildInducedMssc(inst, tree, chain);
  const MsscSolution sol = ChainGreedySolution(induced, tree, chain, {-1, -1});
  ASSERT_GE(sol.order.size(), 2u);
  EXPECT_EQ(sol.order[0], tree.node(0).test);
  EXPECT_EQ(sol.order[1], tree.node(next).test);
  const Rational chain_weight = inst.weight(tree.node(0).consistent) + inst.weight(tree.node(next).consistent);
  EXPECT_LE(chain_weight, MsscCost(induced.instance, sol));
}

TEST(SetSystemIo, TextRoundTrip) {
  const SetSystem s = Weighted({1, 2, 1}, {HypothesisSet::Of(3, {0, 2}), HypothesisSet(3), HypothesisSet::Of(3, {1})});
  std::stringstream buffer;
  WriteSetSystemText(buffer, s);
  const SetSystem back = ReadSetSystemText(buffer);
  EXPECT_EQ(back.universe_size(), 3);
  ASSERT_EQ(back.num_sets(), 3);
  for (int e = 0; e < 3; ++e) EXPECT_EQ(back.weight(e), s.weight(e));
  for (int j = 0; j < 3; ++j) EXPECT_EQ(back.sets[static_cast<std::size_t>(j)], s.sets[static_cast<std::size_t>(j)]);
}

TEST(SetSystemIo, RejectsOutOfRangeMembers) {
  std::istringstream in("2 1\n1/2 1/2\n1 3\n");
  EXPECT_THROW(ReadSetSystemText(in), ParseError);
}

}  // namespace
}  // namespace splitwise
