#include "splitwise/exact.h"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>
#include <vector>

namespace splitwise {
namespace {

struct SignatureHash {
  std::size_t operator()(const std::vector<Answer>& s) const {
    std::size_t h = 1469598103934665603ull;
    for (Answer a : s) h = (h ^ a) * 1099511628211ull;
    return h;
  }
};

}  // namespace

PartialTreeSolver::PartialTreeSolver(const Instance& inst, SearchBudget budget)
    : inst_(&inst), budget_(budget), start_(std::chrono::steady_clock::now()) {}

void PartialTreeSolver::ChargeExpansion() {
  ++stats_.expansions;
  if (stats_.expansions > budget_.max_expansions) {
    stats_.memo_entries = static_cast<std::int64_t>(memo_.size());
    throw BudgetExceededError("exact search exceeded " + std::to_string(budget_.max_expansions) +
                                  " expansions",
                              stats_);
  }
  if (budget_.time_limit && (stats_.expansions & 255) == 0 &&
      std::chrono::steady_clock::now() - start_ > *budget_.time_limit) {
    stats_.memo_entries = static_cast<std::int64_t>(memo_.size());
    throw BudgetExceededError("exact search exceeded its time limit", stats_);
  }
}

Weight PartialTreeSolver::Solve(const HypothesisSet& H, int b) {
  const int size = H.size();
  b = std::min(b, size - 1);
  if (b <= 0 || size <= 1) return 0;
  Key key{H, b};
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++stats_.memo_hits;
    return it->second.cost;
  }
  ChargeExpansion();

  const std::vector<int> members = H.ToVector();
  const Weight own = inst_->units(H);
  const int k = inst_->num_answers();
  std::unordered_set<std::vector<Answer>, SignatureHash> seen;
  std::vector<Answer> signature(members.size());
  std::vector<Answer> relabel(static_cast<std::size_t>(k));
  std::vector<HypothesisSet> parts;

  Weight best = std::numeric_limits<Weight>::max();
  int best_test = -1;
  for (int j = 0; j < inst_->num_tests(); ++j) {
    // Canonical partition: answers relabeled in order of first appearance.
    std::fill(relabel.begin(), relabel.end(), std::numeric_limits<Answer>::max());
    Answer next = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      Answer& label = relabel[inst_->answer(j, members[i])];
      if (label == std::numeric_limits<Answer>::max()) label = next++;
      signature[i] = label;
    }
    if (next <= 1) continue;
    if (!seen.insert(signature).second) continue;

    parts.assign(static_cast<std::size_t>(next), HypothesisSet(H.universe()));
    for (std::size_t i = 0; i < members.size(); ++i) parts[signature[i]].insert(members[i]);
    Weight cost = own;
    for (const HypothesisSet& part : parts) {
      if (cost >= best) break;
      cost += Solve(part, b - 1);
    }
    if (cost < best) {
      best = cost;
      best_test = j;
    }
  }
  if (best_test < 0) {
    throw InvalidInstanceError("instance invalid at S: no test splits it",
                               FindUndistinguishedPair(*inst_, H));
  }
  memo_.emplace(std::move(key), Entry{best, best_test});
  return best;
}

Weight PartialTreeSolver::MinCostUnits(const HypothesisSet& H, int b) {
  if (b < 0) throw Error("negative depth budget");
  if (H.empty()) throw InvalidInstanceError("empty restriction");
  const Weight cost = Solve(H, b);
  stats_.memo_entries = static_cast<std::int64_t>(memo_.size());
  return cost;
}

Rational PartialTreeSolver::MinCost(const HypothesisSet& H, int b) {
  const Weight cost = MinCostUnits(H, b);
  const Weight own = inst_->units(H);
  return own == 0 ? Rational(0) : MakeRational(cost, own);
}

void PartialTreeSolver::Emit(TreeBuilder& builder, int target, const HypothesisSet& H, int b) {
  const int size = H.size();
  b = std::min(b, size - 1);
  if (b <= 0 || size <= 1) return;
  const Entry& entry = memo_.at(Key{H, b});
  const int test = entry.test;
  const std::vector<int> children = builder.Split(target, test);
  for (int c : children) {
    if (c == kNoNode) continue;
    const HypothesisSet part = builder.node(c).consistent;
    Solve(part, b - 1);
    Emit(builder, c, part, b - 1);
  }
}

DecisionTree PartialTreeSolver::PartialTree(const HypothesisSet& H, int b) {
  MinCostUnits(H, b);
  TreeBuilder builder(*inst_, H);
  Emit(builder, builder.root(), H, b);
  stats_.memo_entries = static_cast<std::int64_t>(memo_.size());
  return builder.Build();
}

DecisionTree PartialTreeSolver::OptimalTree(const HypothesisSet& H) {
  if (H.empty()) throw InvalidInstanceError("empty restriction");
  if (auto pair = FindUndistinguishedPair(*inst_, H)) {
    throw InvalidInstanceError("restriction is not a valid instance", pair);
  }
  return PartialTree(H, H.size() - 1);
}

DecisionTree PartialTree(const Instance& inst, const HypothesisSet& H, int b) {
  PartialTreeSolver solver(inst);
  return solver.PartialTree(H, b);
}

DecisionTree OptimalTree(const Instance& inst, const HypothesisSet& H, SearchBudget budget) {
  PartialTreeSolver solver(inst, budget);
  return solver.OptimalTree(H);
}

DecisionTree OptimalTree(const Instance& inst, SearchBudget budget) {
  return OptimalTree(inst, inst.AllHypotheses(), budget);
}

std::int64_t ExpansionEnvelope(int m, int k, int b) {
  const long double base = static_cast<long double>(m) * k;
  long double total = 0, term = 1;
  for (int i = 0; i <= b; ++i) {
    total += term;
    term *= base;
    if (total > 9.0e18L) return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(total);
}

}  // namespace splitwise
