#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "splitwise/errors.h"
#include "splitwise/exact.h"
#include "splitwise/fulltree.h"
#include "splitwise/generators.h"
#include "test_util.h"

namespace splitwise {
namespace {

bool AllPass(const AuditReport& report) {
  for (const AuditCheck& c : report.checks()) {
    if (!c.pass) {
      ADD_FAILURE() << FormatAuditCheck(c, true);
      return false;
    }
  }
  return true;
}

TEST(DepthBudget, GeneralFormula) {
  EXPECT_EQ(GeneralDepthBudget(256, 0.5, Rational(1)), 1536);
  EXPECT_NEAR(static_cast<double>(RecursionThreshold(256, 0.5, 1536, FullTreeMode::kGeneral)), 768.0, 1e-9);
  // log2 R adds to the 12 log2 n factor.
  EXPECT_EQ(GeneralDepthBudget(256, 0.5, Rational(4)), (12 * 8 + 2) * 16);
}

TEST(DepthBudget, UniformFormula) {
  EXPECT_EQ(UniformDepthBudget(256, 0.5, 0.03), 515);
  EXPECT_NEAR(static_cast<double>(RecursionThreshold(256, 0.5, 515, FullTreeMode::kUniform)),
              515.0 * std::pow(256.0, -0.5 / 3), 1e-9);
}

TEST(DepthBudget, RecursionLimits) {
  EXPECT_EQ(RecursionDepthLimit(0.5, FullTreeMode::kGeneral), 16);
  EXPECT_EQ(RecursionDepthLimit(0.3, FullTreeMode::kGeneral), 27);
  EXPECT_EQ(RecursionDepthLimit(0.3, FullTreeMode::kUniform), 10);
  EXPECT_EQ(RecursionDepthLimit(0.8, FullTreeMode::kUniform), 4);
}

TEST(FullTree, SmallInstanceEqualsPartialTree) {
  const Instance inst = testing::SingletonTests3();
  FullTreeConfig cfg;
  const FullTreeResult result = FullTree(inst, cfg);
  EXPECT_EQ(result.trace.max_level(), 0);
  EXPECT_EQ(result.tree, PartialTree(inst, inst.AllHypotheses(), 2));
  EXPECT_TRUE(AllPass(AuditTrace(result.trace, inst, result.tree, Rational(5, 3))));
}

TEST(FullTree, RatioBoundViolationThrows) {
  const Instance inst = testing::MakeInstance({"1/2", "1/4", "1/4"}, 2, {{1, 2, 2}, {2, 1, 2}});
  FullTreeConfig cfg;
  cfg.ratio_bound = Rational(3, 2);
  EXPECT_THROW(FullTree(inst, cfg), InvalidInstanceError);
  cfg.ratio_bound = 2;
  EXPECT_NO_THROW(FullTree(inst, cfg));
}

TEST(FullTree, BadConfigThrows) {
  const Instance inst = testing::SingletonTests3();
  FullTreeConfig cfg;
  cfg.alpha = 1.0;
  EXPECT_THROW(FullTree(inst, cfg), Error);
  cfg.alpha = 0.5;
  cfg.ratio_bound = Rational(1, 2);
  EXPECT_THROW(FullTree(inst, cfg), Error);
}

TEST(FullTreeUniform, RejectsWeightedInstances) {
  const Instance inst = testing::MakeInstance({"1/2", "1/4", "1/4"}, 2, {{1, 2, 2}, {2, 1, 2}});
  EXPECT_THROW(FullTreeUniform(inst, FullTreeConfig{}), InvalidInstanceError);
}

TEST(FullTreeUniform, BelowCutoffIsOptimal) {
  for (int trial = 0; trial < 20; ++trial) {
    RandomSpec spec;
    spec.n = 4 + trial % 7;
    spec.m = 8;
    spec.seed = 500 + static_cast<std::uint64_t>(trial);
    const Instance inst = GenerateRandom(spec);
    const FullTreeResult result = FullTreeUniform(inst, FullTreeConfig{});
    EXPECT_EQ(Cost(result.tree, inst).total, Cost(OptimalTree(inst), inst).total);
  }
}

// Small forced depths send root calls down the threshold branch; the trace
// audits still have to hold there. Depths 2 and 3 give branching partial
// trees, so unresolved leaves must be located by their grafted ids.
TEST(FullTree, ForcedRecursionDecomposes) {
  int recursed = 0;
  for (int trial = 0; trial < 30; ++trial) {
    RandomSpec spec;
    spec.n = 6 + trial % 4;
    spec.m = 8;
    spec.k = 2;
    spec.seed = 600 + static_cast<std::uint64_t>(trial);
    spec.profile = static_cast<WeightProfile>(trial % 3);
    const Instance inst = GenerateRandom(spec);
    const Rational c_opt = Cost(OptimalTree(inst), inst).total;
    for (long long b : {1LL, 2LL, 3LL}) {
      FullTreeConfig cfg;
      cfg.ratio_bound = inst.WeightRatio();
      cfg.depth_override = b;
      const FullTreeResult result = FullTree(inst, cfg);
      if (result.trace.max_level() > 0) ++recursed;
      EXPECT_TRUE(AllPass(AuditTrace(result.trace, inst, result.tree, c_opt))) << "trial " << trial << " b " << b;
      EXPECT_TRUE(IsComplete(result.tree, inst, inst.AllHypotheses()));
    }
  }
  EXPECT_GT(recursed, 0);
}

// Singleton tests on n=9: C_G = 44/9 sits below 7 * 9^{-1/8}, and depth 7
// leaves a pair unresolved, so the recursion reaches level 1.
TEST(FullTree, DeepRecursionOccurs) {
  std::vector<std::vector<int>> tests;
  for (int j = 0; j < 9; ++j) {
    std::vector<int> t(9, 2);
    t[static_cast<std::size_t>(j)] = 1;
    tests.push_back(t);
  }
  const Instance inst = testing::Uniform(9, 2, tests);
  FullTreeConfig cfg;
  cfg.depth_override = 7;
  const FullTreeResult result = FullTree(inst, cfg);
  EXPECT_EQ(result.trace.max_level(), 1);
  EXPECT_EQ(Cost(result.tree, inst).total, Rational(44, 9));
  EXPECT_TRUE(AllPass(AuditTrace(result.trace, inst, result.tree, Rational(44, 9))));
}

TEST(FullTree, TraceIsDeterministic) {
  RandomSpec spec;
  spec.n = 8;
  spec.m = 7;
  spec.seed = 8;
  spec.profile = WeightProfile::kSkewed;
  const Instance inst = GenerateRandom(spec);
  FullTreeConfig cfg;
  cfg.ratio_bound = inst.WeightRatio();
  cfg.depth_override = 2;
  std::ostringstream a, b;
  WriteTrace(a, FullTree(inst, cfg).trace);
  WriteTrace(b, FullTree(inst, cfg).trace);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_FALSE(a.str().empty());
}

TEST(FullTree, ApproximationOnSolvableInstances) {
  for (int trial = 0; trial < 30; ++trial) {
    RandomSpec spec;
    spec.n = 3 + trial % 7;
    spec.m = 7;
    spec.k = 2 + trial % 2;
    spec.seed = 800 + static_cast<std::uint64_t>(trial);
    spec.profile = static_cast<WeightProfile>(trial % 3);
    const Instance inst = GenerateRandom(spec);
    const Rational c_opt = Cost(OptimalTree(inst), inst).total;
    for (double alpha : {0.3, 0.5, 0.8}) {
      FullTreeConfig cfg;
      cfg.alpha = alpha;
      cfg.ratio_bound = inst.WeightRatio();
      const FullTreeResult result = FullTree(inst, cfg);
      const long double factor = 25.0L / alpha + std::log2(ToLongDouble(cfg.ratio_bound));
      EXPECT_LE(ToLongDouble(Cost(result.tree, inst).total), factor * ToLongDouble(c_opt));
      EXPECT_TRUE(AllPass(AuditTrace(result.trace, inst, result.tree, c_opt)));
    }
  }
}

}  // namespace
}  // namespace splitwise
