#include "splitwise/generators.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "splitwise/errors.h"

namespace splitwise {
namespace {

constexpr int kRandomAttempts = 100;
constexpr int kMaxGenerated = 1 << 20;

int FloorLog2(int x) { return std::bit_width(static_cast<unsigned>(x)) - 1; }

bool Bit(int value, int t) { return ((value >> t) & 1) != 0; }

// Answers are 0-based internally: "1" is stored as 0 and "2" as 1.
std::vector<Answer> Indicator(int n, auto&& member) {
  std::vector<Answer> column(static_cast<std::size_t>(n), 1);
  for (int h = 0; h < n; ++h) {
    if (member(h)) column[static_cast<std::size_t>(h)] = 0;
  }
  return column;
}

void CollectGoodSets(GoodSet set, int c_star, std::vector<GoodSet>& out) {
  out.push_back(set);
  const int size = set.size();
  if (size <= 1) return;
  const int first = 1 + size / c_star;
  if (first >= size) return;  // only when c* < 3; the split would not shrink
  CollectGoodSets({set.first_row, set.first_row + first - 1}, c_star, out);
  CollectGoodSets({set.first_row + first, set.last_row}, c_star, out);
}

}  // namespace

int GridInstance::CountTests(GridTestType type) const {
  return static_cast<int>(std::count(test_type.begin(), test_type.end(), type));
}

GridInstance GenerateGridAdversarial(int n, int c_star, GridRange range) {
  if (n < 1 || n > kMaxGenerated) throw InvalidInstanceError("grid size out of range");
  if (c_star < 2 || c_star > n) throw InvalidInstanceError("c_star must lie in [2, n]");
  if (range == GridRange::kStrict) {
    if (n < 16) throw InvalidInstanceError("grid needs n >= 16");
    if (std::log2(static_cast<double>(n)) > c_star) throw InvalidInstanceError("grid needs log2 n <= c_star");
  }
  GridInstance grid;
  grid.n = n;
  grid.c_star = c_star;
  grid.n_star = n / c_star * c_star;
  grid.rows = grid.n_star / c_star;
  CollectGoodSets({1, grid.rows}, c_star, grid.good_sets);

  std::vector<std::vector<Answer>> tests;
  auto add = [&](GridTestType type, std::vector<Answer> column) {
    tests.push_back(std::move(column));
    grid.test_type.push_back(type);
  };
  for (int h = grid.n_star; h < n; ++h) {
    add(GridTestType::kSingleton, Indicator(n, [&](int g) { return g == h; }));
  }
  for (int c = 1; c <= c_star; ++c) {
    add(GridTestType::kColumn, Indicator(n, [&](int g) { return grid.ColumnOf(g) == c; }));
  }
  const int bits = FloorLog2(grid.rows);
  for (int c = 1; c <= c_star; ++c) {
    for (int t = 0; t <= bits; ++t) {
      add(GridTestType::kColumnRowBit,
          Indicator(n, [&](int g) { return grid.ColumnOf(g) == c && Bit(grid.RowOf(g), t); }));
    }
  }
  for (const GoodSet& set : grid.good_sets) {
    add(GridTestType::kGoodSet, Indicator(n, [&](int g) {
          const int row = grid.RowOf(g);
          return row >= set.first_row && row <= set.last_row;
        }));
  }
  grid.instance = Instance(std::vector<Weight>(static_cast<std::size_t>(n), 1), 2, std::move(tests));
  return grid;
}

ReductionInstance GenerateSetCoverReduction(const SetSystem& cover, double r) {
  if (!(r > 0 && r < 1)) throw InvalidInstanceError("r must lie in (0,1)");
  const int n0 = cover.universe_size();
  if (n0 < 1) throw InvalidInstanceError("set cover universe is empty");
  if (cover.num_sets() < 1) throw InvalidInstanceError("set cover has no sets");
  ReductionInstance out;
  out.q = static_cast<int>(std::floor(std::log2(static_cast<long double>(n0)) / r + 1e-12L));
  const long double blocks =
      std::pow(static_cast<long double>(n0), 1.0L / r) / (static_cast<long double>(n0) * out.q + 1);
  if (blocks > kMaxGenerated) throw InvalidInstanceError("reduction instance too large");
  out.ell = static_cast<int>(std::floor(blocks + 1e-12L));
  if (out.ell == 0) throw Error("n0 too small for r");
  const long long per_block = static_cast<long long>(n0) * out.q + 1;
  if (per_block * out.ell > kMaxGenerated) throw InvalidInstanceError("reduction instance too large");
  out.n = static_cast<int>(per_block * out.ell);
  out.ratio = 1 + MakeRational(out.n, out.ell);

  std::vector<Weight> units;
  for (int h1 = 1; h1 <= out.ell; ++h1) {
    out.block.push_back(h1);
    out.copy.push_back(0);
    out.element.push_back(0);
    units.push_back(static_cast<Weight>(out.ell) + out.n);
    for (int h2 = 1; h2 <= out.q; ++h2) {
      for (int h3 = 1; h3 <= n0; ++h3) {
        out.block.push_back(h1);
        out.copy.push_back(h2);
        out.element.push_back(h3);
        units.push_back(out.ell);
      }
    }
  }

  const int n = out.n;
  auto in_set = [&](int g, int i1, int i2, int j) {
    const std::size_t gi = static_cast<std::size_t>(g);
    return out.block[gi] == i1 && out.copy[gi] == i2 && out.element[gi] > 0 &&
           cover.sets[static_cast<std::size_t>(j)].contains(out.element[gi] - 1);
  };
  std::vector<std::vector<Answer>> tests;
  for (int i1 = 1; i1 <= out.ell; ++i1) {
    for (int i2 = 1; i2 <= out.q; ++i2) {
      for (int j = 0; j < cover.num_sets(); ++j) {
        tests.push_back(Indicator(n, [&](int g) { return in_set(g, i1, i2, j); }));
      }
    }
  }
  const int element_bits = FloorLog2(n0);
  for (int i1 = 1; i1 <= out.ell; ++i1) {
    for (int i2 = 1; i2 <= out.q; ++i2) {
      for (int j = 0; j < cover.num_sets(); ++j) {
        for (int t = 0; t <= element_bits; ++t) {
          tests.push_back(Indicator(n, [&](int g) {
            return in_set(g, i1, i2, j) && Bit(out.element[static_cast<std::size_t>(g)], t);
          }));
        }
      }
    }
  }
  const int block_bits = FloorLog2(out.ell);
  for (int t = 0; t <= block_bits; ++t) {
    tests.push_back(Indicator(n, [&](int g) { return Bit(out.block[static_cast<std::size_t>(g)], t); }));
  }
  out.instance = Instance(std::move(units), 2, std::move(tests));
  const ValidationReport report = ValidateInstance(out.instance);
  if (!report.ok) {
    throw InvalidInstanceError("reduction instance is invalid: " + report.problems.front(),
                               report.undistinguished_pair);
  }
  return out;
}

Instance GenerateRandom(const RandomSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxGenerated) throw InvalidInstanceError("n out of range");
  if (spec.m < 1) throw InvalidInstanceError("m must be at least 1");
  if (spec.k < 2) throw InvalidInstanceError("k must be at least 2");
  std::mt19937_64 rng(spec.seed);

  std::vector<Weight> units(static_cast<std::size_t>(spec.n), 1);
  switch (spec.profile) {
    case WeightProfile::kUniform:
      break;
    case WeightProfile::kSkewed: {
      if (!(spec.skew_shape > 0)) throw InvalidInstanceError("skew shape must be positive");
      std::gamma_distribution<double> gamma(spec.skew_shape, 1.0);
      for (Weight& w : units) w = std::max<Weight>(1, std::llround(gamma(rng) * 1000.0));
      break;
    }
    case WeightProfile::kTwoTier: {
      if (spec.ratio < 1) throw InvalidInstanceError("two-tier ratio must be at least 1");
      const BigInt heavy = numerator(spec.ratio);
      const BigInt light = denominator(spec.ratio);
      if (heavy > BigInt(1) << 40 || light > BigInt(1) << 40) throw InvalidInstanceError("ratio too fine");
      std::fill(units.begin(), units.end(), light.convert_to<Weight>());
      units.front() = heavy.convert_to<Weight>();
      break;
    }
  }

  std::uniform_int_distribution<int> answer(0, spec.k - 1);
  std::optional<std::pair<int, int>> last_pair;
  for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
    std::vector<std::vector<Answer>> tests(static_cast<std::size_t>(spec.m),
                                           std::vector<Answer>(static_cast<std::size_t>(spec.n)));
    for (auto& column : tests) {
      for (Answer& a : column) a = static_cast<Answer>(answer(rng));
    }
    Instance inst(units, spec.k, std::move(tests));
    last_pair = FindUndistinguishedPair(inst, inst.AllHypotheses());
    if (!last_pair) return inst;
  }
  throw InvalidInstanceError("could not separate all hypotheses in 100 attempts", last_pair);
}

WeightProfile ParseWeightProfile(const std::string& name) {
  if (name == "uniform") return WeightProfile::kUniform;
  if (name == "skewed") return WeightProfile::kSkewed;
  if (name == "two-tier") return WeightProfile::kTwoTier;
  throw ParseError("unknown weight profile: " + name);
}

std::string WeightProfileName(WeightProfile profile) {
  switch (profile) {
    case WeightProfile::kUniform:
      return "uniform";
    case WeightProfile::kSkewed:
      return "skewed";
    case WeightProfile::kTwoTier:
      return "two-tier";
  }
  return "uniform";
}

}  // namespace splitwise
