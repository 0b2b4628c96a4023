#ifndef SPLITWISE_TREE_H_
#define SPLITWISE_TREE_H_

#include <optional>
#include <vector>

#include "splitwise/hypothesis_set.h"
#include "splitwise/instance.h"
#include "splitwise/rational.h"

namespace splitwise {

inline constexpr int kLeaf = -1;
inline constexpr int kNoNode = -1;

struct TreeNode {
  int test = kLeaf;           // 0-based test index, kLeaf for leaves
  int parent = kNoNode;
  int parent_answer = -1;     // 0-based answer on the edge from the parent
  int depth = 0;
  std::vector<int> children;  // per answer, kNoNode when absent; empty at leaves
  HypothesisSet consistent;   // L(v) within the tree's scope
  Weight units = 0;           // weight units of `consistent`

  bool is_leaf() const { return test == kLeaf; }
};

// Immutable decision tree over a scope H of hypotheses. Node ids are preorder
// positions (children visited in answer order); the root is node 0.
class DecisionTree {
 public:
  DecisionTree() = default;

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int root() const { return 0; }
  // Throws std::out_of_range for foreign node ids.
  const TreeNode& node(int v) const;
  const HypothesisSet& scope() const { return scope_; }
  int num_hypotheses() const { return scope_.universe(); }
  int num_answers() const { return num_answers_; }
  int height() const;
  bool IsAncestor(int ancestor, int v) const;

  // Deepest vertex whose path constraints h satisfies.
  int DeepestConsistentNode(const Instance& inst, int h) const;
  // Root-to-v node ids, inclusive.
  std::vector<int> PathTo(int v) const;

  // Recomputes every L(v) by replaying path constraints over the scope and
  // checks the partition property and cached weights.
  bool VerifyCaches(const Instance& inst) const;

  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  friend class TreeBuilder;
  friend struct TreeFaultInjector;

  std::vector<TreeNode> nodes_;
  HypothesisSet scope_;
  int num_answers_ = 0;
};

// Builds trees by splitting leaves or grafting finished subtrees.
class TreeBuilder {
 public:
  TreeBuilder(const Instance& inst, HypothesisSet scope);

  int root() const { return 0; }
  const TreeNode& node(int v) const;

  // Splits leaf v on test j and returns the per-answer child ids. A split
  // that leaves L(v) in one piece is rejected unless allow_useless is set.
  std::vector<int> Split(int v, int test);
  // Replaces leaf v by a copy of `subtree`, whose scope must equal L(v).
  // Returns the builder id of every subtree node, indexed by subtree id.
  std::vector<int> Graft(int v, const DecisionTree& subtree);

  void set_allow_useless(bool allow) { allow_useless_ = allow; }
  void set_verify_caches(bool verify) { verify_caches_ = verify; }

  DecisionTree Build() const;

 private:
  const Instance* inst_;
  std::vector<TreeNode> nodes_;
  HypothesisSet scope_;
  bool allow_useless_ = false;
  bool verify_caches_ = false;
};

// Test hook used by the audit harness negative control.
struct TreeFaultInjector {
  static void ShiftCachedWeight(DecisionTree& tree, int v, Weight delta);
};

struct CostBreakdown {
  Rational total;                 // C(T;H)
  Weight depth_units = 0;         // sum over h in H of units(h) * d_T(h)
  Weight normalizer_units = 0;    // units(H)
  Rational normalizer;            // p(H)
  std::vector<int> depth;         // d_T(h) per hypothesis, -1 outside H
};

// L(v), served from the tree's cache.
const HypothesisSet& ConsistentSet(const DecisionTree& tree, int v);

CostBreakdown Cost(const DecisionTree& tree, const Instance& inst, const HypothesisSet& H);
CostBreakdown Cost(const DecisionTree& tree, const Instance& inst);

// Sum of p(v) over interior vertices, divided by p(scope). Requires the tree
// to be complete with respect to its scope.
Rational InteriorWeightSum(const DecisionTree& tree, const Instance& inst);
Weight InteriorWeightUnits(const DecisionTree& tree, const Instance& inst);

// True iff every h in H is isolated at a leaf or reaches depth >= b.
bool IsComplete(const DecisionTree& tree, const Instance& inst, const HypothesisSet& H,
                std::optional<int> b = std::nullopt);

// v^+: the heaviest child, ties toward the largest answer. kNoNode at leaves.
int MajorityChild(const DecisionTree& tree, int v);
// p^-(v) in units: p(v) - p(v^+). Zero at leaves.
Weight MinorityUnits(const DecisionTree& tree, int v);

// Splices out interior nodes whose single child carries all of L(v).
DecisionTree RemoveUselessNodes(const DecisionTree& tree, const Instance& inst);

}  // namespace splitwise

#endif  // SPLITWISE_TREE_H_
