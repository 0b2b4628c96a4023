#ifndef SPLITWISE_MSSC_H_
#define SPLITWISE_MSSC_H_

#include <vector>

#include "splitwise/errors.h"
#include "splitwise/instance.h"
#include "splitwise/set_system.h"
#include "splitwise/tree.h"

namespace splitwise {

using MsscInstance = SetSystem;

// Set indices in selection order; a covering prefix suffices.
struct MsscSolution {
  std::vector<int> order;
  friend bool operator==(const MsscSolution&, const MsscSolution&) = default;
};

class UncoveredError : public Error {
 public:
  UncoveredError(const std::string& what, HypothesisSet residue) : Error(what), residue_(std::move(residue)) {}
  const HypothesisSet& residue() const { return residue_; }

 private:
  HypothesisSet residue_;
};

// sum over l of p(S minus the union of the first l-1 chosen sets), in units.
Weight MsscCostUnitsPrefixSum(const MsscInstance& inst, const MsscSolution& sol);
// sum over elements of units(e) * (first position covering e).
Weight MsscCostUnitsCoverTime(const MsscInstance& inst, const MsscSolution& sol);
// Both formulas; throws std::logic_error if they disagree.
Rational MsscCost(const MsscInstance& inst, const MsscSolution& sol);

// Maximum remaining weight each step, smallest index on ties.
MsscSolution MsscGreedy(const MsscInstance& inst);
// Completes `prefix` greedily.
MsscSolution MsscGreedyCompletion(const MsscInstance& inst, std::vector<int> prefix);

// Exact optimum by search over covered sets. Throws BudgetExceededError when
// there are more than 10 distinct nonempty sets over a universe above 20.
MsscSolution MsscOptimal(const MsscInstance& inst);

// True iff every pick of the covering prefix covers maximum remaining weight.
bool IsGreedySolution(const MsscInstance& inst, const MsscSolution& sol);

// The instance induced by a downward path P in a tree: universe S = L(P_1),
// A_j = I^-_{j,S} ∩ S for tests j, then A_{m+h} = {h} ∩ S.
struct InducedMssc {
  MsscInstance instance;            // universe ordered as the members of S
  std::vector<int> hypothesis;      // element -> original hypothesis
  std::vector<int> element;         // hypothesis -> element, -1 outside S
  int num_tests = 0;
};

InducedMssc BuildInducedMssc(const Instance& inst, const DecisionTree& tree, const std::vector<int>& chain);

// The ordering from the chain correspondence: the chain's tests in order,
// with the singleton of the heavy hypothesis h0 inserted after the last
// non-heavy vertex when the chain ends in h0-heavy vertices, then greedy.
// heavy_of[i] is the heavy hypothesis of chain[i] or -1.
MsscSolution ChainGreedySolution(const InducedMssc& induced, const DecisionTree& tree,
                                 const std::vector<int>& chain, const std::vector<int>& heavy_of);

}  // namespace splitwise

#endif  // SPLITWISE_MSSC_H_
