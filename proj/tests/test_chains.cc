#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "splitwise/chains.h"
#include "splitwise/errors.h"
#include "splitwise/exact.h"
#include "splitwise/generators.h"
#include "splitwise/greedy.h"
#include "test_util.h"

namespace splitwise {
namespace {

const AuditCheck* Find(const AuditReport& report, const std::string& name) {
  for (const AuditCheck& c : report.checks()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void ExpectAllPass(const AuditReport& report) {
  for (const AuditCheck& c : report.checks()) EXPECT_TRUE(c.pass) << FormatAuditCheck(c, true);
}

TEST(Classify, PerfectTreeIsBalanced) {
  const Instance inst = testing::PerfectSplits4();
  const DecisionTree tree = BuildGreedyTree(inst);
  const Classification labels = ClassifyVertices(inst, tree, Rational(1, 2));
  for (const VertexLabel& label : labels.labels) {
    EXPECT_TRUE(label.imbalanced_levels.empty());
    if (label.interior) {
      EXPECT_TRUE(label.balanced);
      EXPECT_EQ(label.heavy, -1);
    }
  }
  EXPECT_FALSE(labels.IsImbalancedAt(0, 1));
}

TEST(Classify, EvenSplitsStayBalancedForSmallDelta) {
  const Instance inst = testing::PerfectSplits4();
  const DecisionTree tree = BuildGreedyTree(inst);
  const Classification labels = ClassifyVertices(inst, tree, Rational(1, 3));
  for (const VertexLabel& label : labels.labels) EXPECT_TRUE(label.imbalanced_levels.empty());
}

TEST(Classify, LopsidedRootIsImbalanced) {
  // Only singleton tests: the root splits off 1/8 of the mass.
  std::vector<std::vector<int>> tests;
  for (int j = 0; j < 8; ++j) {
    std::vector<int> t(8, 2);
    t[static_cast<std::size_t>(j)] = 1;
    tests.push_back(t);
  }
  const Instance inst = testing::Uniform(8, 2, tests);
  const DecisionTree tree = BuildGreedyTree(inst);
  const Classification labels = ClassifyVertices(inst, tree, Rational(1, 4));
  // p^- = 1/8 <= 1/4 and p = 1 > 1/2: level 1. 1/8 <= 1/16 fails at level 2.
  EXPECT_EQ(labels.labels[0].imbalanced_levels, std::vector<int>{1});
  EXPECT_FALSE(labels.labels[0].balanced);
  const ChainDecomposition chains = DecomposeChains(labels, tree);
  ASSERT_FALSE(chains.chains.empty());
  ASSERT_EQ(chains.chains[0].size(), 1u);
  EXPECT_EQ(chains.chains[0][0].front(), 0);
  for (std::size_t i = 1; i < chains.chains[0][0].size(); ++i) {
    EXPECT_EQ(chains.chains[0][0][i], MajorityChild(tree, chains.chains[0][0][i - 1]));
  }
}

TEST(Classify, UniformHeavyIffMinorityBelowOneHypothesis) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 12;
    const Instance inst = oracle::BiasedInstance(rng, n, 2 * n, 0.2, std::vector<Weight>(static_cast<std::size_t>(n), 1));
    const DecisionTree tree = BuildGreedyTree(inst);
    const Classification labels = ClassifyVertices(inst, tree, Rational(1, 3));
    for (const VertexLabel& label : labels.labels) {
      if (!label.interior) {
        EXPECT_EQ(label.heavy_units, 0);
        continue;
      }
      EXPECT_EQ(label.heavy >= 0, label.minority_units < inst.units(0));
      EXPECT_EQ(label.heavy_units, label.heavy >= 0 ? inst.units(0) : 0);
    }
  }
}

TEST(Classify, RejectsNonGreedyTreeAndBadDelta) {
  const Instance inst = testing::Uniform(4, 2, {{1, 2, 2, 2}, {1, 1, 2, 2}, {1, 2, 1, 2}});
  TreeBuilder builder(inst, inst.AllHypotheses());
  const std::vector<int> kids = builder.Split(builder.root(), 0);
  builder.Graft(kids[1], BuildGreedyTree(inst, builder.node(kids[1]).consistent));
  EXPECT_THROW(ClassifyVertices(inst, builder.Build(), Rational(1, 2)), Error);
  const DecisionTree greedy = BuildGreedyTree(inst);
  EXPECT_THROW(ClassifyVertices(inst, greedy, Rational(1)), Error);
  EXPECT_THROW(ClassifyVertices(inst, greedy, Rational(0)), Error);
}

TEST(Decompose, NoImbalancedVerticesGivesEmptyChains) {
  const Instance inst = testing::PerfectSplits4();
  const DecisionTree tree = BuildGreedyTree(inst);
  const ChainDecomposition chains = DecomposeChains(ClassifyVertices(inst, tree, Rational(1, 2)), tree);
  for (const auto& level : chains.chains) EXPECT_TRUE(level.empty());
}

TEST(Decompose, GridFixturePartitionsImbalancedVertices) {
  const GridInstance grid = GenerateGridAdversarial(64, 4, GridRange::kRelaxed);
  const DecisionTree tree = BuildGreedyTree(grid.instance);
  for (const Rational& delta : {Rational(1, 2), Rational(1, 4), Rational(1, 16)}) {
    const Classification labels = ClassifyVertices(grid.instance, tree, delta);
    const ChainDecomposition chains = DecomposeChains(labels, tree);
    for (int s = 1; s <= static_cast<int>(chains.chains.size()); ++s) {
      int count = 0;
      for (const auto& chain : chains.chains[static_cast<std::size_t>(s - 1)]) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
          EXPECT_TRUE(labels.IsImbalancedAt(chain[i], s));
          if (i > 0) {
            EXPECT_EQ(chain[i], MajorityChild(tree, chain[i - 1]));
          }
        }
        count += static_cast<int>(chain.size());
      }
      int expected = 0;
      for (const VertexLabel& label : labels.labels) expected += labels.IsImbalancedAt(label.node, s) ? 1 : 0;
      EXPECT_EQ(count, expected);
    }
  }
}

TEST(Monotone, GreedyMinorityNeverIncreases) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 20;
    std::vector<Weight> units(static_cast<std::size_t>(n));
    for (Weight& u : units) u = 1 + static_cast<Weight>(rng() % 9);
    const Instance inst = oracle::BiasedInstance(rng, n, n + 4, 0.3, units);
    EXPECT_EQ(CountMinorityIncreases(BuildGreedyTree(inst)), 0);
  }
}

TEST(Monotone, HandBuiltTreeCanIncrease) {
  // Root splits off one hypothesis; the child then splits evenly.
  const Instance inst = testing::Uniform(5, 2, {{1, 2, 2, 2, 2}, {2, 1, 1, 2, 2}, {2, 1, 2, 1, 2}});
  TreeBuilder builder(inst, inst.AllHypotheses());
  const std::vector<int> kids = builder.Split(builder.root(), 0);
  builder.Graft(kids[1], BuildGreedyTree(inst, builder.node(kids[1]).consistent));
  EXPECT_GT(CountMinorityIncreases(builder.Build()), 0);
}

TEST(Theorem1Bound, Examples) {
  const Rational p = MakeRational(1, 1024);
  EXPECT_NEAR(static_cast<double>(Theorem1Bound(1024, p, p, Rational(32))), 768.0, 1e-9);
  EXPECT_NEAR(static_cast<double>(UniformBinaryBound(1024, Rational(32))), 384.0, 1e-9);
}

TEST(Theorem1Bound, RatioEAddsOneCopyOfC) {
  const Rational p_min = MakeRational(1, 1024);
  const Rational p_max = p_min * ParseRational("2.718281828459045235360287");
  const long double base = Theorem1Bound(1024, p_min, p_min, Rational(32));
  EXPECT_NEAR(static_cast<double>(Theorem1Bound(1024, p_min, p_max, Rational(32)) - base), 32.0, 1e-9);
}

TEST(Theorem1Bound, UndefinedAtOrBelowOne) {
  const Rational p = MakeRational(1, 4);
  try {
    Theorem1Bound(4, p, p, Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "bound undefined");
  }
  EXPECT_THROW(UniformBinaryBound(4, Rational(1, 2)), Error);
}

TEST(EntropyAudit, PerfectTree) {
  const Instance inst = testing::PerfectSplits4();
  const DecisionTree tree = BuildGreedyTree(inst);
  const AuditReport report = EntropyAudit(inst, tree, ClassifyVertices(inst, tree, Rational(1, 2)));
  const AuditCheck* weight = Find(report, "entropy.balanced_weight");
  ASSERT_NE(weight, nullptr);
  EXPECT_EQ(std::get<Rational>(weight->lhs), Rational(2));
  // log 4 / log 4 * 4
  EXPECT_NEAR(static_cast<double>(std::get<long double>(weight->rhs)), 4.0, 1e-12);
  ExpectAllPass(report);
}

TEST(EntropyAudit, SingleHypothesisIsTrivial) {
  const Instance inst = testing::Uniform(1, 2, {{1}});
  const DecisionTree tree = BuildGreedyTree(inst);
  const AuditReport report = EntropyAudit(inst, tree, ClassifyVertices(inst, tree, Rational(1, 2)));
  EXPECT_EQ(std::get<Rational>(Find(report, "entropy.balanced_weight")->lhs), Rational(0));
  ExpectAllPass(report);
}

TEST(EntropyAudit, HoldsOnRandomInstances) {
  for (int trial = 0; trial < 200; ++trial) {
    RandomSpec spec;
    spec.n = 2 + trial % 63;
    spec.m = 20;
    spec.k = 2 + trial % 2;
    spec.seed = 4000 + static_cast<std::uint64_t>(trial);
    spec.profile = static_cast<WeightProfile>(trial % 3);
    const Instance inst = GenerateRandom(spec);
    const DecisionTree tree = BuildGreedyTree(inst);
    for (const Rational& delta : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
      const Classification labels = ClassifyVertices(inst, tree, delta);
      ExpectAllPass(EntropyAudit(inst, tree, labels));
      DecomposeChains(labels, tree);
    }
  }
}

TEST(ImbalancedAudit, NoImbalancedVerticesHasZeroLeftSide) {
  const Instance inst = testing::PerfectSplits4();
  const DecisionTree tree = BuildGreedyTree(inst);
  const AuditReport report = ImbalancedAudit(inst, tree, ClassifyVertices(inst, tree, Rational(1, 2)), Rational(2));
  const AuditCheck* sum3 = Find(report, "sum3.weighted");
  ASSERT_NE(sum3, nullptr);
  EXPECT_EQ(std::get<Rational>(sum3->lhs), Rational(0));
  ExpectAllPass(report);
}

TEST(IsNontrivialBinary, Examples) {
  EXPECT_TRUE(IsNontrivialBinary(testing::PerfectSplits4()));
  EXPECT_FALSE(IsNontrivialBinary(testing::SingletonTests3()));
}

// Full chain pipeline with delta = 1/C_OPT on biased weighted instances.
TEST(ChainPipeline, AuditsHoldOnSolvableInstances) {
  std::mt19937_64 rng(33);
  int chains_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 5;
    std::vector<Weight> units(static_cast<std::size_t>(n), 1);
    if (trial % 2) {
      for (Weight& u : units) u = 1 + static_cast<Weight>(rng() % 5);
    }
    const Instance inst = oracle::BiasedInstance(rng, n, n + 2, 0.25, units);
    const DecisionTree greedy = BuildGreedyTree(inst);
    const DecisionTree optimal = OptimalTree(inst);
    const Rational c_opt = Cost(optimal, inst).total;
    if (c_opt <= 1) continue;
    const Classification labels = ClassifyVertices(inst, greedy, 1 / c_opt);
    const ChainDecomposition chains = DecomposeChains(labels, greedy);
    for (const auto& level : chains.chains) chains_seen += static_cast<int>(level.size());
    ExpectAllPass(ImbalancedAudit(inst, greedy, labels, c_opt));
    ExpectAllPass(ChainMsscAudit(inst, greedy, labels, chains, c_opt));
    ExpectAllPass(HeavyPathAudit(inst, greedy, labels, optimal));
  }
  EXPECT_GT(chains_seen, 20);
}

}  // namespace
}  // namespace splitwise
