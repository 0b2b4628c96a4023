#ifndef SPLITWISE_CHAINS_H_
#define SPLITWISE_CHAINS_H_

#include <optional>
#include <vector>

#include "splitwise/audit_report.h"
#include "splitwise/instance.h"
#include "splitwise/tree.h"

namespace splitwise {

struct VertexLabel {
  int node = kNoNode;
  bool interior = false;
  Weight units = 0;           // p(v)
  Weight minority_units = 0;  // p^-(v)
  std::vector<int> imbalanced_levels;  // ascending s with p^- <= delta^s < p/2
  bool balanced = true;       // interior and imbalanced at no level
  int heavy = -1;             // the h with p_h > p^-(v), if any
  Weight heavy_units = 0;     // q(v)
};

struct Classification {
  Rational delta;
  long double s_max = 0;   // log(1/p_min) / log(1/delta)
  int max_level = 0;       // levels 1..max_level were examined
  std::vector<VertexLabel> labels;  // by node id
  std::vector<int> heavy_top;       // per hypothesis: u_h^top, or kNoNode
  std::vector<int> leaf_of;         // per hypothesis in scope: u_h^bottom

  bool IsImbalancedAt(int node, int s) const;
};

// Requires a greedy tree (audited first) and delta in (0,1). Throws Error on
// a non-greedy tree, and on any violation of the heavy-vertex structure:
// two heavy hypotheses at one vertex, a gap on a heavy path, or a minority
// edge below a heavy vertex.
Classification ClassifyVertices(const Instance& inst, const DecisionTree& tree, const Rational& delta);

struct ChainDecomposition {
  Rational delta;
  long double s_max = 0;
  // chains[s - 1] lists the level-s chains, each top to bottom.
  std::vector<std::vector<std::vector<int>>> chains;
};

// Groups level-s imbalanced vertices by their maximal imbalanced ancestor.
// Throws Error if a group is not a downward path along majority edges or if
// the groups fail to partition the level-s imbalanced vertices.
ChainDecomposition DecomposeChains(const Classification& labels, const DecisionTree& tree);

// Number of parent/child pairs where p^- increases going down.
int CountMinorityIncreases(const DecisionTree& tree);

// (12 log2(1/p_min) / log2 C + ln(p_max/p_min)) * C. Throws for C <= 1.
long double Theorem1Bound(int n, const Rational& p_min, const Rational& p_max, const Rational& c_opt);
// 6 log2(n) / log2(C) * C. Throws for C <= 1.
long double UniformBinaryBound(int n, const Rational& c_opt);

// Balanced weight against (log2 n / log2(2/delta)) * (2/delta), the balanced
// minority bound, and the balanced/imbalanced partition of interior weight.
AuditReport EntropyAudit(const Instance& inst, const DecisionTree& tree, const Classification& labels);

// Imbalanced weight against the uniform binary and weighted bounds, heavy
// weight against (1 + ln(p_max/p_min)) C_OPT, and on uniform binary
// instances the assembled bound on C_G.
AuditReport ImbalancedAudit(const Instance& inst, const DecisionTree& tree, const Classification& labels,
                            const Rational& c_opt);

// Per chain: the correspondence ordering is greedy and bounds the chain
// weight, greedy is within 4 of optimal; per level: optimal MSSC costs
// summed against C_OPT.
AuditReport ChainMsscAudit(const Instance& inst, const DecisionTree& tree, const Classification& labels,
                           const ChainDecomposition& chains, const Rational& c_opt);

// Heavy paths against optimal depths, via the set-cover instance on
// L(u_h^top) minus h, and the identity sum q(v) = sum p_h (d(u^bot) - d(u^top)).
AuditReport HeavyPathAudit(const Instance& inst, const DecisionTree& greedy_tree, const Classification& labels,
                           const DecisionTree& optimal_tree);

// True iff some test splits the instance into two parts of size >= 2 each
// (binary instances); the uniform level-sum bound assumes this.
bool IsNontrivialBinary(const Instance& inst);

}  // namespace splitwise

#endif  // SPLITWISE_CHAINS_H_
