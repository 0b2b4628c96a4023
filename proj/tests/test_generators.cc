#include <gtest/gtest.h>

#include <sstream>

#include "splitwise/errors.h"
#include "splitwise/generators.h"
#include "splitwise/greedy.h"
#include "splitwise/instance_io.h"

namespace splitwise {
namespace {

TEST(Grid, SixteenByFour) {
  const GridInstance grid = GenerateGridAdversarial(16, 4);
  EXPECT_EQ(grid.n_star, 16);
  EXPECT_EQ(grid.rows, 4);
  EXPECT_EQ(grid.CountTests(GridTestType::kSingleton), 0);
  EXPECT_EQ(grid.CountTests(GridTestType::kColumn), 4);
  EXPECT_EQ(grid.CountTests(GridTestType::kColumnRowBit), 12);
  // [1,4], [1,2], [1], [2], [3,4], [3], [4]
  ASSERT_EQ(grid.good_sets.size(), 7u);
  EXPECT_EQ(grid.good_sets[0].size(), 4);
  EXPECT_EQ(grid.good_sets[1].first_row, 1);
  EXPECT_EQ(grid.good_sets[1].last_row, 2);
  EXPECT_EQ(grid.CountTests(GridTestType::kGoodSet), 7);
  EXPECT_TRUE(ValidateInstance(grid.instance).ok);
  EXPECT_TRUE(grid.instance.IsUniform());
  const int root = GreedyChoice(grid.instance, grid.instance.AllHypotheses());
  EXPECT_EQ(grid.test_type[static_cast<std::size_t>(root)], GridTestType::kGoodSet);
}

TEST(Grid, RowsAndColumns) {
  const GridInstance grid = GenerateGridAdversarial(18, 5);
  EXPECT_EQ(grid.n_star, 15);
  EXPECT_EQ(grid.CountTests(GridTestType::kSingleton), 3);
  EXPECT_EQ(grid.RowOf(0), 1);
  EXPECT_EQ(grid.ColumnOf(6), 2);
  EXPECT_EQ(grid.RowOf(6), 2);
  EXPECT_EQ(grid.RowOf(16), 0);
  EXPECT_TRUE(ValidateInstance(grid.instance).ok);
}

TEST(Grid, SingleRowIsValid) {
  const GridInstance grid = GenerateGridAdversarial(16, 16);
  EXPECT_EQ(grid.rows, 1);
  EXPECT_TRUE(ValidateInstance(grid.instance).ok);
}

TEST(Grid, RangeErrors) {
  EXPECT_THROW(GenerateGridAdversarial(8, 4), InvalidInstanceError);
  EXPECT_THROW(GenerateGridAdversarial(64, 4), InvalidInstanceError);
  EXPECT_THROW(GenerateGridAdversarial(16, 17), InvalidInstanceError);
  EXPECT_NO_THROW(GenerateGridAdversarial(64, 4, GridRange::kRelaxed));
  EXPECT_THROW(GenerateGridAdversarial(64, 1, GridRange::kRelaxed), InvalidInstanceError);
}

TEST(Grid, RelaxedSweepValidates) {
  for (int n : {64, 256, 1024}) {
    const GridInstance grid = GenerateGridAdversarial(n, 8, GridRange::kRelaxed);
    EXPECT_TRUE(ValidateInstance(grid.instance).ok) << n;
  }
}

SetSystem TwoSingletons() { return MakeUniformSetSystem(2, {HypothesisSet::Of(2, {0}), HypothesisSet::Of(2, {1})}); }

TEST(Reduction, MinimalParameters) {
  const ReductionInstance red = GenerateSetCoverReduction(TwoSingletons(), 0.4);
  EXPECT_EQ(red.q, 2);
  EXPECT_EQ(red.ell, 1);
  EXPECT_EQ(red.n, 5);
  EXPECT_EQ(red.instance.weight(red.instance.AllHypotheses()), Rational(1));
  EXPECT_EQ(red.instance.WeightRatio(), 1 + MakeRational(red.n, red.ell));
  EXPECT_EQ(red.ratio, Rational(6));
  // Bottom element first: 1/(2n) + 1/(2 ell).
  EXPECT_EQ(red.copy[0], 0);
  EXPECT_EQ(red.instance.weight(0), MakeRational(1, 10) + MakeRational(1, 2));
  EXPECT_EQ(red.instance.weight(1), MakeRational(1, 10));
  EXPECT_TRUE(ValidateInstance(red.instance).ok);
}

TEST(Reduction, SmallerExponent) {
  const ReductionInstance red = GenerateSetCoverReduction(TwoSingletons(), 0.3);
  EXPECT_EQ(red.q, 3);
  EXPECT_EQ(red.ell, 1);
  EXPECT_EQ(red.n, 7);
  EXPECT_EQ(red.instance.weight(red.instance.AllHypotheses()), Rational(1));
}

TEST(Reduction, SeveralBlocks) {
  const ReductionInstance red = GenerateSetCoverReduction(TwoSingletons(), 0.2);
  // q = 5, ell = floor(32 / 11) = 2.
  EXPECT_EQ(red.q, 5);
  EXPECT_EQ(red.ell, 2);
  EXPECT_EQ(red.n, 22);
  EXPECT_EQ(red.instance.weight(red.instance.AllHypotheses()), Rational(1));
  EXPECT_EQ(red.instance.WeightRatio(), Rational(12));
  EXPECT_TRUE(ValidateInstance(red.instance).ok);
}

TEST(Reduction, TooSmallUniverse) {
  const SetSystem cover = MakeUniformSetSystem(3, {HypothesisSet::Full(3)});
  try {
    GenerateSetCoverReduction(cover, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "n0 too small for r");
  }
}

TEST(Reduction, UncoveredElementIsInvalid) {
  const SetSystem cover = MakeUniformSetSystem(2, {HypothesisSet::Of(2, {0})});
  EXPECT_THROW(GenerateSetCoverReduction(cover, 0.4), InvalidInstanceError);
}

std::string Bytes(const Instance& inst) {
  std::ostringstream out;
  WriteInstanceText(out, inst);
  return out.str();
}

TEST(Random, Deterministic) {
  RandomSpec spec;
  spec.n = 12;
  spec.m = 9;
  spec.k = 3;
  spec.seed = 77;
  spec.profile = WeightProfile::kSkewed;
  EXPECT_EQ(Bytes(GenerateRandom(spec)), Bytes(GenerateRandom(spec)));
  RandomSpec other = spec;
  other.seed = 78;
  EXPECT_NE(Bytes(GenerateRandom(spec)), Bytes(GenerateRandom(other)));
}

TEST(Random, UniformProfile) {
  RandomSpec spec;
  spec.n = 10;
  const Instance inst = GenerateRandom(spec);
  for (int h = 0; h < 10; ++h) EXPECT_EQ(inst.weight(h), MakeRational(1, 10));
  EXPECT_TRUE(ValidateInstance(inst).ok);
}

TEST(Random, TwoTierRatio) {
  RandomSpec spec;
  spec.n = 9;
  spec.profile = WeightProfile::kTwoTier;
  spec.ratio = ParseRational("7/2");
  const Instance inst = GenerateRandom(spec);
  EXPECT_EQ(inst.WeightRatio(), Rational(7, 2));
  EXPECT_EQ(inst.weight(inst.AllHypotheses()), Rational(1));
}

TEST(Random, SkewedIsValid) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomSpec spec;
    spec.n = 16;
    spec.m = 12;
    spec.seed = seed;
    spec.profile = WeightProfile::kSkewed;
    const Instance inst = GenerateRandom(spec);
    EXPECT_TRUE(ValidateInstance(inst).ok);
    EXPECT_GT(inst.min_units(), 0);
  }
}

TEST(Random, TooFewTestsFails) {
  RandomSpec spec;
  spec.n = 16;
  spec.m = 2;
  EXPECT_THROW(GenerateRandom(spec), InvalidInstanceError);
}

TEST(Random, ProfileNames) {
  for (WeightProfile p : {WeightProfile::kUniform, WeightProfile::kSkewed, WeightProfile::kTwoTier}) {
    EXPECT_EQ(ParseWeightProfile(WeightProfileName(p)), p);
  }
  EXPECT_THROW(ParseWeightProfile("zipf"), ParseError);
}

}  // namespace
}  // namespace splitwise
