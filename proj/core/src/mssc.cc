#include "splitwise/mssc.h"

#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "splitwise/greedy.h"

namespace splitwise {
namespace {

void CheckIndices(const MsscInstance& inst, const MsscSolution& sol) {
  for (int j : sol.order) {
    if (j < 0 || j >= inst.num_sets()) throw std::out_of_range("set index out of range");
  }
}

UncoveredError MakeUncovered(const HypothesisSet& residue) {
  return UncoveredError("element " + std::to_string(residue.front() + 1) + " is never covered", residue);
}

}  // namespace

Weight MsscCostUnitsPrefixSum(const MsscInstance& inst, const MsscSolution& sol) {
  CheckIndices(inst, sol);
  HypothesisSet uncovered = inst.Universe();
  Weight cost = 0;
  for (int j : sol.order) {
    if (uncovered.empty()) break;
    cost += inst.units(uncovered);
    uncovered -= inst.sets[static_cast<std::size_t>(j)];
  }
  if (!uncovered.empty()) throw MakeUncovered(uncovered);
  return cost;
}

Weight MsscCostUnitsCoverTime(const MsscInstance& inst, const MsscSolution& sol) {
  CheckIndices(inst, sol);
  Weight cost = 0;
  for (int e = 0; e < inst.universe_size(); ++e) {
    int time = 0;
    for (std::size_t l = 0; l < sol.order.size(); ++l) {
      if (inst.sets[static_cast<std::size_t>(sol.order[l])].contains(e)) {
        time = static_cast<int>(l) + 1;
        break;
      }
    }
    if (time == 0) {
      HypothesisSet residue(inst.universe_size());
      residue.insert(e);
      throw MakeUncovered(residue);
    }
    cost += inst.element_units[static_cast<std::size_t>(e)] * time;
  }
  return cost;
}

Rational MsscCost(const MsscInstance& inst, const MsscSolution& sol) {
  const Weight prefix = MsscCostUnitsPrefixSum(inst, sol);
  const Weight cover = MsscCostUnitsCoverTime(inst, sol);
  if (prefix != cover) throw std::logic_error("MSSC cost formulas disagree");
  return MakeRational(prefix, inst.denominator);
}

MsscSolution MsscGreedyCompletion(const MsscInstance& inst, std::vector<int> prefix) {
  MsscSolution sol{std::move(prefix)};
  CheckIndices(inst, sol);
  HypothesisSet uncovered = inst.Universe();
  for (int j : sol.order) uncovered -= inst.sets[static_cast<std::size_t>(j)];
  while (!uncovered.empty()) {
    int best = -1;
    Weight best_units = -1;
    for (int j = 0; j < inst.num_sets(); ++j) {
      const HypothesisSet gain = inst.sets[static_cast<std::size_t>(j)] & uncovered;
      if (gain.empty()) continue;
      const Weight units = inst.units(gain);
      if (units > best_units) {
        best = j;
        best_units = units;
      }
    }
    if (best < 0) throw MakeUncovered(uncovered);
    sol.order.push_back(best);
    uncovered -= inst.sets[static_cast<std::size_t>(best)];
  }
  return sol;
}

MsscSolution MsscGreedy(const MsscInstance& inst) { return MsscGreedyCompletion(inst, {}); }

bool IsGreedySolution(const MsscInstance& inst, const MsscSolution& sol) {
  CheckIndices(inst, sol);
  HypothesisSet uncovered = inst.Universe();
  for (int j : sol.order) {
    if (uncovered.empty()) break;
    Weight best = 0;
    for (const HypothesisSet& s : inst.sets) best = std::max(best, inst.units(s & uncovered));
    if (inst.units(inst.sets[static_cast<std::size_t>(j)] & uncovered) != best) return false;
    uncovered -= inst.sets[static_cast<std::size_t>(j)];
  }
  return uncovered.empty();
}

MsscSolution MsscOptimal(const MsscInstance& inst) {
  if (!inst.Uncoverable().empty()) throw MakeUncovered(inst.Uncoverable());
  // Distinct nonempty sets, first occurrence wins.
  std::vector<int> candidates;
  for (int j = 0; j < inst.num_sets(); ++j) {
    const HypothesisSet& s = inst.sets[static_cast<std::size_t>(j)];
    if (s.empty()) continue;
    bool duplicate = false;
    for (int c : candidates) duplicate = duplicate || inst.sets[static_cast<std::size_t>(c)] == s;
    if (!duplicate) candidates.push_back(j);
  }
  if (candidates.size() > 10 && inst.universe_size() > 20) {
    throw BudgetExceededError("MSSC search needs <= 10 distinct sets or a universe <= 20", {});
  }

  struct Entry {
    Weight cost;
    int choice;
  };
  std::unordered_map<HypothesisSet, Entry, HypothesisSetHash> memo;
  constexpr std::size_t kMaxStates = 1u << 22;
  // f(covered) = units(uncovered) + min over sets adding something.
  auto solve = [&](auto&& self, const HypothesisSet& covered) -> Weight {
    const HypothesisSet uncovered = inst.Universe() - covered;
    if (uncovered.empty()) return 0;
    if (auto it = memo.find(covered); it != memo.end()) return it->second.cost;
    if (memo.size() >= kMaxStates) throw BudgetExceededError("MSSC search state budget exceeded", {});
    Weight best = std::numeric_limits<Weight>::max();
    int choice = -1;
    for (int j : candidates) {
      const HypothesisSet& s = inst.sets[static_cast<std::size_t>(j)];
      if (!s.Intersects(uncovered)) continue;
      const Weight cost = self(self, covered | s);
      if (cost < best) {
        best = cost;
        choice = j;
      }
    }
    best += inst.units(uncovered);
    memo.emplace(covered, Entry{best, choice});
    return best;
  };
  HypothesisSet covered(inst.universe_size());
  solve(solve, covered);
  MsscSolution sol;
  while (!(covered == inst.Universe())) {
    const int j = memo.at(covered).choice;
    sol.order.push_back(j);
    covered |= inst.sets[static_cast<std::size_t>(j)];
  }
  return sol;
}

InducedMssc BuildInducedMssc(const Instance& inst, const DecisionTree& tree, const std::vector<int>& chain) {
  if (chain.empty()) throw Error("chain is empty");
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (tree.node(chain[i]).parent != chain[i - 1]) throw Error("chain is not a downward path");
  }
  const HypothesisSet& S = tree.node(chain.front()).consistent;
  InducedMssc out;
  out.num_tests = inst.num_tests();
  out.hypothesis = S.ToVector();
  out.element.assign(static_cast<std::size_t>(inst.num_hypotheses()), -1);
  const int size = static_cast<int>(out.hypothesis.size());
  for (int e = 0; e < size; ++e) out.element[static_cast<std::size_t>(out.hypothesis[static_cast<std::size_t>(e)])] = e;
  out.instance.denominator = inst.total_units();
  for (int h : out.hypothesis) out.instance.element_units.push_back(inst.units(h));
  for (int j = 0; j < inst.num_tests(); ++j) {
    const SplitProfile profile = ComputeSplitProfile(inst, S, j);
    HypothesisSet minority(size);
    for (int e = 0; e < size; ++e) {
      if (inst.answer(j, out.hypothesis[static_cast<std::size_t>(e)]) != profile.majority_answer) minority.insert(e);
    }
    out.instance.sets.push_back(std::move(minority));
  }
  for (int h = 0; h < inst.num_hypotheses(); ++h) {
    HypothesisSet single(size);
    if (out.element[static_cast<std::size_t>(h)] >= 0) single.insert(out.element[static_cast<std::size_t>(h)]);
    out.instance.sets.push_back(std::move(single));
  }
  return out;
}

MsscSolution ChainGreedySolution(const InducedMssc& induced, const DecisionTree& tree,
                                 const std::vector<int>& chain, const std::vector<int>& heavy_of) {
  if (heavy_of.size() != chain.size()) throw Error("heavy map does not match chain");
  // l0: one past the last vertex that is not heavy.
  std::size_t l0 = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (heavy_of[i] < 0) l0 = i + 1;
  }
  std::vector<int> prefix;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i == l0) prefix.push_back(induced.num_tests + heavy_of[i]);
    prefix.push_back(tree.node(chain[i]).test);
  }
  return MsscGreedyCompletion(induced.instance, std::move(prefix));
}

}  // namespace splitwise
