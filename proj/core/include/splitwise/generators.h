#ifndef SPLITWISE_GENERATORS_H_
#define SPLITWISE_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "splitwise/instance.h"
#include "splitwise/rational.h"
#include "splitwise/set_system.h"

namespace splitwise {

// Grid family: hypotheses 1..n* on r rows and c* columns, the rest isolated.
enum class GridTestType { kSingleton = 1, kColumn = 2, kColumnRowBit = 3, kGoodSet = 4 };

// kStrict requires log2 n <= c* <= n and n >= 16. kRelaxed only needs
// 2 <= c* <= n, for sweeps that hold c* fixed while n grows.
enum class GridRange { kStrict, kRelaxed };

struct GoodSet {
  int first_row = 1;  // 1-based, inclusive
  int last_row = 1;
  int size() const { return last_row - first_row + 1; }
};

struct GridInstance {
  Instance instance;
  int n = 0;
  int c_star = 0;
  int n_star = 0;
  int rows = 0;
  std::vector<GoodSet> good_sets;       // discovery order, [r] first
  std::vector<GridTestType> test_type;  // per test

  int CountTests(GridTestType type) const;
  // 1-based row and column of hypothesis h (0-based); 0 for isolated ones.
  int RowOf(int h) const { return h < n_star ? h / c_star + 1 : 0; }
  int ColumnOf(int h) const { return h < n_star ? h % c_star + 1 : 0; }
};

GridInstance GenerateGridAdversarial(int n, int c_star, GridRange range = GridRange::kStrict);

// Set-cover reduction over `cover` (its weights are ignored).
struct ReductionInstance {
  Instance instance;
  int q = 0;
  int ell = 0;
  int n = 0;
  Rational ratio;  // p_max / p_min = 1 + n / ell
  // Per hypothesis: block h1 (1-based), copy h2 (1-based, 0 for the bottom
  // element) and element h3 (1-based, 0 for the bottom element).
  std::vector<int> block, copy, element;
};

// Throws Error("n0 too small for r") when ell = 0, and InvalidInstanceError
// when the sets leave an element uncovered.
ReductionInstance GenerateSetCoverReduction(const SetSystem& cover, double r);

enum class WeightProfile { kUniform, kSkewed, kTwoTier };

struct RandomSpec {
  int n = 8;
  int m = 8;
  int k = 2;
  std::uint64_t seed = 1;
  WeightProfile profile = WeightProfile::kUniform;
  Rational ratio = 4;       // two-tier: heavy / light
  double skew_shape = 0.5;  // skewed: gamma shape, smaller is more skewed
};

// Independent uniform answer vectors, resampled up to 100 times until every
// pair of hypotheses is separated. Throws InvalidInstanceError otherwise.
Instance GenerateRandom(const RandomSpec& spec);

WeightProfile ParseWeightProfile(const std::string& name);
std::string WeightProfileName(WeightProfile profile);

}  // namespace splitwise

#endif  // SPLITWISE_GENERATORS_H_
