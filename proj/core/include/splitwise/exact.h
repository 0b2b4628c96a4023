#ifndef SPLITWISE_EXACT_H_
#define SPLITWISE_EXACT_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "splitwise/errors.h"
#include "splitwise/hypothesis_set.h"
#include "splitwise/instance.h"
#include "splitwise/tree.h"

namespace splitwise {

struct SearchBudget {
  std::int64_t max_expansions = 200'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

// Exhaustive PartialTree(H, b) with a memo keyed on (H, min(b, |H|-1)).
// Candidate tests at each node are the splitting tests, one per induced
// partition (the smallest index wins). Among minimum-cost trees the one with
// the lexicographically smallest tests, root first, is returned.
// Not thread-safe: the memo is owned by one solver.
class PartialTreeSolver {
 public:
  explicit PartialTreeSolver(const Instance& inst, SearchBudget budget = {});

  // Minimum of sum_{h in H} units(h) * d_T(h) over trees complete w.r.t. H
  // up to depth b.
  Weight MinCostUnits(const HypothesisSet& H, int b);
  // C_OPT(H, b) = MinCostUnits / units(H).
  Rational MinCost(const HypothesisSet& H, int b);

  DecisionTree PartialTree(const HypothesisSet& H, int b);
  // PartialTree with b = |H| - 1. Throws InvalidInstanceError when H holds an
  // undistinguished pair and BudgetExceededError past the budget.
  DecisionTree OptimalTree(const HypothesisSet& H);

  const SearchStats& stats() const { return stats_; }

 private:
  struct Key {
    HypothesisSet set;
    int depth;
    friend bool operator==(const Key& a, const Key& b) { return a.depth == b.depth && a.set == b.set; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.set.Hash() * 31 + static_cast<std::size_t>(k.depth); }
  };
  struct Entry {
    Weight cost;
    int test;
  };

  Weight Solve(const HypothesisSet& H, int b);
  void Emit(TreeBuilder& builder, int target, const HypothesisSet& H, int b);
  void ChargeExpansion();

  const Instance* inst_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  SearchStats stats_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
};

DecisionTree PartialTree(const Instance& inst, const HypothesisSet& H, int b);
DecisionTree OptimalTree(const Instance& inst, const HypothesisSet& H, SearchBudget budget = {});
DecisionTree OptimalTree(const Instance& inst, SearchBudget budget = {});

// Upper envelope sum_{i=0}^{b} (mK)^i on node expansions, saturating.
std::int64_t ExpansionEnvelope(int m, int k, int b);

}  // namespace splitwise

#endif  // SPLITWISE_EXACT_H_
