#ifndef SPLITWISE_GREEDY_H_
#define SPLITWISE_GREEDY_H_

#include <optional>
#include <vector>

#include "splitwise/hypothesis_set.h"
#include "splitwise/instance.h"
#include "splitwise/tree.h"

namespace splitwise {

struct SplitProfile {
  int test = 0;
  std::vector<Weight> part_units;  // per answer, over S only
  Weight max_part_units = 0;
  int majority_answer = 0;         // ties toward the largest answer
  Weight minority_units = 0;       // p(S) - p(majority part)
  bool useless = false;            // a single answer holds all of S
};

SplitProfile ComputeSplitProfile(const Instance& inst, const HypothesisSet& S, int test);

// Test minimizing the heaviest part over S among tests that split S;
// smallest index on ties. Throws InvalidInstanceError when nothing splits S.
int GreedyChoice(const Instance& inst, const HypothesisSet& S);

DecisionTree BuildGreedyTree(const Instance& inst, const HypothesisSet& H);
DecisionTree BuildGreedyTree(const Instance& inst);

struct GreedyViolation {
  int node = kNoNode;
  int chosen_test = 0;
  int better_test = 0;
};

// First interior vertex at which some test has a strictly lighter max part.
std::optional<GreedyViolation> AuditGreedy(const Instance& inst, const DecisionTree& tree);

}  // namespace splitwise

#endif  // SPLITWISE_GREEDY_H_
