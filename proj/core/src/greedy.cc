#include "splitwise/greedy.h"

#include <limits>
#include <stdexcept>

#include "splitwise/errors.h"

namespace splitwise {
namespace {

// Members of S in a flat list; profiles scan it once per test.
struct Scan {
  std::vector<int> members;
  std::vector<Weight> units;
};

Scan MakeScan(const Instance& inst, const HypothesisSet& S) {
  Scan scan;
  scan.members = S.ToVector();
  scan.units.reserve(scan.members.size());
  for (int h : scan.members) scan.units.push_back(inst.units(h));
  return scan;
}

void FillProfile(const Instance& inst, const Scan& scan, int test, SplitProfile& profile,
                 std::vector<int>& counts) {
  const int k = inst.num_answers();
  profile.test = test;
  profile.part_units.assign(static_cast<std::size_t>(k), 0);
  counts.assign(static_cast<std::size_t>(k), 0);
  const auto& column = inst.test(test);
  Weight total = 0;
  for (std::size_t i = 0; i < scan.members.size(); ++i) {
    const Answer a = column[static_cast<std::size_t>(scan.members[i])];
    profile.part_units[a] += scan.units[i];
    ++counts[a];
    total += scan.units[i];
  }
  profile.max_part_units = -1;
  int nonempty = 0;
  for (int a = 0; a < k; ++a) {
    if (counts[static_cast<std::size_t>(a)] > 0) ++nonempty;
    if (profile.part_units[static_cast<std::size_t>(a)] >= profile.max_part_units) {
      profile.max_part_units = profile.part_units[static_cast<std::size_t>(a)];
      profile.majority_answer = a;
    }
  }
  profile.minority_units = total - profile.max_part_units;
  profile.useless = nonempty <= 1;
}

int ChooseFromScan(const Instance& inst, const HypothesisSet& S, const Scan& scan) {
  SplitProfile profile;
  std::vector<int> counts;
  int best = -1;
  Weight best_units = std::numeric_limits<Weight>::max();
  for (int j = 0; j < inst.num_tests(); ++j) {
    FillProfile(inst, scan, j, profile, counts);
    if (profile.useless) continue;
    if (profile.max_part_units < best_units) {
      best = j;
      best_units = profile.max_part_units;
    }
  }
  if (best < 0) {
    throw InvalidInstanceError("instance invalid at S: no test splits it",
                               FindUndistinguishedPair(inst, S));
  }
  return best;
}

}  // namespace

SplitProfile ComputeSplitProfile(const Instance& inst, const HypothesisSet& S, int test) {
  if (test < 0 || test >= inst.num_tests()) throw std::out_of_range("test index out of range");
  if (S.empty()) throw InvalidInstanceError("split profile of an empty set");
  SplitProfile profile;
  std::vector<int> counts;
  FillProfile(inst, MakeScan(inst, S), test, profile, counts);
  return profile;
}

int GreedyChoice(const Instance& inst, const HypothesisSet& S) {
  if (S.size() < 2) throw InvalidInstanceError("greedy choice needs at least two hypotheses");
  return ChooseFromScan(inst, S, MakeScan(inst, S));
}

DecisionTree BuildGreedyTree(const Instance& inst, const HypothesisSet& H) {
  TreeBuilder builder(inst, H);
  std::vector<int> pending{builder.root()};
  while (!pending.empty()) {
    const int v = pending.back();
    pending.pop_back();
    const HypothesisSet& L = builder.node(v).consistent;
    if (L.size() < 2) continue;
    const int j = ChooseFromScan(inst, L, MakeScan(inst, L));
    for (int c : builder.Split(v, j)) {
      if (c != kNoNode) pending.push_back(c);
    }
  }
  return builder.Build();
}

DecisionTree BuildGreedyTree(const Instance& inst) {
  return BuildGreedyTree(inst, inst.AllHypotheses());
}

std::optional<GreedyViolation> AuditGreedy(const Instance& inst, const DecisionTree& tree) {
  SplitProfile profile;
  std::vector<int> counts;
  for (int v = 0; v < tree.num_nodes(); ++v) {
    const TreeNode& n = tree.node(v);
    if (n.is_leaf()) continue;
    const Scan scan = MakeScan(inst, n.consistent);
    FillProfile(inst, scan, n.test, profile, counts);
    const Weight chosen = profile.max_part_units;
    for (int j = 0; j < inst.num_tests(); ++j) {
      FillProfile(inst, scan, j, profile, counts);
      if (!profile.useless && profile.max_part_units < chosen) {
        return GreedyViolation{v, n.test, j};
      }
    }
  }
  return std::nullopt;
}

}  // namespace splitwise
