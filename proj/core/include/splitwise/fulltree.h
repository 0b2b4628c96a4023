#ifndef SPLITWISE_FULLTREE_H_
#define SPLITWISE_FULLTREE_H_

#include <optional>
#include <string>
#include <vector>

#include "splitwise/audit_report.h"
#include "splitwise/exact.h"
#include "splitwise/hypothesis_set.h"
#include "splitwise/instance.h"
#include "splitwise/tree.h"

namespace splitwise {

enum class FullTreeMode { kGeneral, kUniform };

struct FullTreeConfig {
  double alpha = 0.5;
  Rational ratio_bound = 1;     // R, general mode
  FullTreeMode mode = FullTreeMode::kGeneral;
  double epsilon = 0.03;        // uniform mode
  int brute_force_cutoff = 12;  // n0: modified greedy solves |H| < n0 exactly
  // Replaces the formula value of b (threshold and search depth alike).
  std::optional<long long> depth_override;
  SearchBudget budget;
};

enum class TraceDecision { kGreedySmallWeight, kGreedyThreshold, kPartialExpanded };

struct TraceRecord {
  int level = 0;
  HypothesisSet set;
  Weight units = 0;                  // units(H)
  TraceDecision decision = TraceDecision::kGreedyThreshold;
  Weight greedy_depth_units = 0;     // units(H) * C(T_G(H); H)
  Rational greedy_cost;              // C(T_G(H); H)
  Weight partial_depth_units = 0;    // units(H) * C_OPT(H, b), expanded calls only
  std::optional<Rational> partial_cost;
};

struct RecursionTrace {
  FullTreeMode mode = FullTreeMode::kGeneral;
  double alpha = 0.5;
  int n = 0;
  long long depth_budget = 0;  // b as given by the formula (or override)
  int search_depth = 0;        // min(b, n - 1), the depth PartialTree runs at
  long double threshold = 0;   // n^{-alpha/4} b, or n^{-alpha/3} b in uniform mode
  Weight total_units = 0;
  // Sorted by (level, smallest member of H).
  std::vector<TraceRecord> records;

  int max_level() const;
};

struct FullTreeResult {
  DecisionTree tree;
  RecursionTrace trace;
  SearchStats stats;
};

// ceil((12 log2 n + log2 R) n^alpha)
long long GeneralDepthBudget(int n, double alpha, const Rational& ratio_bound);
// ceil((4 + 2 eps / 3) log2 n n^alpha)
long long UniformDepthBudget(int n, double alpha, double epsilon);
long double RecursionThreshold(int n, double alpha, long long b, FullTreeMode mode);
// ceil(8/alpha) in general mode, ceil(3/alpha) in uniform mode.
int RecursionDepthLimit(double alpha, FullTreeMode mode);

FullTreeResult FullTree(const Instance& inst, const FullTreeConfig& cfg);
FullTreeResult FullTreeUniform(const Instance& inst, FullTreeConfig cfg);

// (a) recursion depth, (b) cost decomposition, (c) disjointness of each F_i
// and of F_greedy, (d) per-level sums against C_OPT when known, and weight
// contraction between consecutive levels.
AuditReport AuditTrace(const RecursionTrace& trace, const Instance& inst, const DecisionTree& output,
                       const std::optional<Rational>& c_opt);

std::string DecisionName(TraceDecision decision);
// One line per call.
void WriteTrace(std::ostream& out, const RecursionTrace& trace, bool as_float = false);

}  // namespace splitwise

#endif  // SPLITWISE_FULLTREE_H_
