#include "splitwise/tree.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "splitwise/errors.h"

namespace splitwise {

const TreeNode& DecisionTree::node(int v) const {
  if (v < 0 || v >= num_nodes()) throw std::out_of_range("node " + std::to_string(v) + " not in tree");
  return nodes_[static_cast<std::size_t>(v)];
}

int DecisionTree::height() const {
  int h = 0;
  for (const TreeNode& n : nodes_) h = std::max(h, n.depth);
  return h;
}

bool DecisionTree::IsAncestor(int ancestor, int v) const {
  node(ancestor);
  for (int u = v; u != kNoNode; u = node(u).parent) {
    if (u == ancestor) return true;
  }
  return false;
}

int DecisionTree::DeepestConsistentNode(const Instance& inst, int h) const {
  if (h < 0 || h >= inst.num_hypotheses()) throw std::out_of_range("hypothesis out of range");
  if (nodes_.empty()) throw Error("empty tree");
  int v = 0;
  while (!nodes_[static_cast<std::size_t>(v)].is_leaf()) {
    const TreeNode& n = nodes_[static_cast<std::size_t>(v)];
    const int next = n.children[inst.answer(n.test, h)];
    if (next == kNoNode) break;
    v = next;
  }
  return v;
}

std::vector<int> DecisionTree::PathTo(int v) const {
  std::vector<int> path;
  for (int u = v; u != kNoNode; u = node(u).parent) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

bool DecisionTree::VerifyCaches(const Instance& inst) const {
  if (nodes_.empty()) return false;
  if (scope_.universe() != inst.num_hypotheses()) return false;
  const TreeNode& root = nodes_.front();
  if (!(root.consistent == scope_) || root.depth != 0 || root.parent != kNoNode) return false;
  for (int v = 0; v < num_nodes(); ++v) {
    const TreeNode& n = nodes_[static_cast<std::size_t>(v)];
    if (n.consistent.empty() || n.units != inst.units(n.consistent)) return false;
    if (n.is_leaf()) {
      if (!n.children.empty()) return false;
      continue;
    }
    if (n.test < 0 || n.test >= inst.num_tests()) return false;
    if (static_cast<int>(n.children.size()) != inst.num_answers()) return false;
    HypothesisSet covered(scope_.universe());
    int present = 0;
    for (int a = 0; a < inst.num_answers(); ++a) {
      HypothesisSet expected(scope_.universe());
      n.consistent.ForEach([&](int h) {
        if (inst.answer(n.test, h) == a) expected.insert(h);
      });
      const int c = n.children[static_cast<std::size_t>(a)];
      if (c == kNoNode) {
        if (!expected.empty()) return false;
        continue;
      }
      if (c <= v || c >= num_nodes()) return false;
      const TreeNode& child = nodes_[static_cast<std::size_t>(c)];
      if (!(child.consistent == expected) || child.parent != v || child.parent_answer != a ||
          child.depth != n.depth + 1) {
        return false;
      }
      covered |= expected;
      ++present;
    }
    if (!(covered == n.consistent)) return false;
    if (present == 1 && nodes_[static_cast<std::size_t>(
                            *std::find_if(n.children.begin(), n.children.end(),
                                          [](int c) { return c != kNoNode; }))]
                                .consistent == n.consistent) {
      return false;
    }
  }
  return true;
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  if (!(a.scope_ == b.scope_) || a.num_answers_ != b.num_answers_ ||
      a.nodes_.size() != b.nodes_.size()) {
    return false;
  }
  for (std::size_t v = 0; v < a.nodes_.size(); ++v) {
    const TreeNode& x = a.nodes_[v];
    const TreeNode& y = b.nodes_[v];
    if (x.test != y.test || x.parent != y.parent || x.parent_answer != y.parent_answer ||
        x.depth != y.depth || x.children != y.children || !(x.consistent == y.consistent) ||
        x.units != y.units) {
      return false;
    }
  }
  return true;
}

TreeBuilder::TreeBuilder(const Instance& inst, HypothesisSet scope)
    : inst_(&inst), scope_(std::move(scope)) {
  if (scope_.universe() != inst.num_hypotheses()) {
    throw InvalidInstanceError("tree scope has the wrong universe");
  }
  if (scope_.empty()) throw InvalidInstanceError("tree scope is empty");
  TreeNode root;
  root.consistent = scope_;
  root.units = inst.units(scope_);
  nodes_.push_back(std::move(root));
}

const TreeNode& TreeBuilder::node(int v) const {
  if (v < 0 || v >= static_cast<int>(nodes_.size())) {
    throw std::out_of_range("node " + std::to_string(v) + " not in builder");
  }
  return nodes_[static_cast<std::size_t>(v)];
}

std::vector<int> TreeBuilder::Split(int v, int test) {
  if (!node(v).is_leaf()) throw Error("node " + std::to_string(v) + " is already split");
  if (test < 0 || test >= inst_->num_tests()) throw std::out_of_range("test out of range");
  const int k = inst_->num_answers();
  std::vector<HypothesisSet> parts(static_cast<std::size_t>(k), HypothesisSet(scope_.universe()));
  nodes_[static_cast<std::size_t>(v)].consistent.ForEach(
      [&](int h) { parts[inst_->answer(test, h)].insert(h); });
  const int nonempty = static_cast<int>(
      std::count_if(parts.begin(), parts.end(), [](const HypothesisSet& s) { return !s.empty(); }));
  if (nonempty <= 1 && !allow_useless_) {
    throw Error("test " + std::to_string(test + 1) + " does not split node " + std::to_string(v));
  }
  std::vector<int> children(static_cast<std::size_t>(k), kNoNode);
  const int depth = nodes_[static_cast<std::size_t>(v)].depth + 1;
  for (int a = 0; a < k; ++a) {
    if (parts[static_cast<std::size_t>(a)].empty()) continue;
    TreeNode child;
    child.parent = v;
    child.parent_answer = a;
    child.depth = depth;
    child.units = inst_->units(parts[static_cast<std::size_t>(a)]);
    child.consistent = std::move(parts[static_cast<std::size_t>(a)]);
    children[static_cast<std::size_t>(a)] = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(child));
  }
  nodes_[static_cast<std::size_t>(v)].test = test;
  nodes_[static_cast<std::size_t>(v)].children = children;
  return children;
}

std::vector<int> TreeBuilder::Graft(int v, const DecisionTree& subtree) {
  if (!node(v).is_leaf()) throw Error("graft target is not a leaf");
  if (!(subtree.scope() == nodes_[static_cast<std::size_t>(v)].consistent)) {
    throw Error("grafted subtree scope differs from L(v)");
  }
  std::vector<int> target(static_cast<std::size_t>(subtree.num_nodes()), kNoNode);
  target[0] = v;
  for (int u = 0; u < subtree.num_nodes(); ++u) {
    const TreeNode& src = subtree.node(u);
    if (src.is_leaf()) continue;
    const std::vector<int> made = Split(target[static_cast<std::size_t>(u)], src.test);
    for (std::size_t a = 0; a < src.children.size(); ++a) {
      if (src.children[a] != kNoNode) target[static_cast<std::size_t>(src.children[a])] = made[a];
    }
  }
  return target;
}

DecisionTree TreeBuilder::Build() const {
  DecisionTree tree;
  tree.scope_ = scope_;
  tree.num_answers_ = inst_->num_answers();
  tree.nodes_.reserve(nodes_.size());
  // Preorder renumbering with children in answer order.
  std::vector<std::pair<int, int>> stack{{0, kNoNode}};
  while (!stack.empty()) {
    auto [old_id, new_parent] = stack.back();
    stack.pop_back();
    const int new_id = static_cast<int>(tree.nodes_.size());
    TreeNode copy = nodes_[static_cast<std::size_t>(old_id)];
    copy.parent = new_parent;
    copy.depth = new_parent == kNoNode ? 0 : tree.nodes_[static_cast<std::size_t>(new_parent)].depth + 1;
    if (new_parent != kNoNode) {
      tree.nodes_[static_cast<std::size_t>(new_parent)].children[static_cast<std::size_t>(copy.parent_answer)] = new_id;
    } else {
      copy.parent_answer = -1;
    }
    tree.nodes_.push_back(std::move(copy));
    const auto& kids = nodes_[static_cast<std::size_t>(old_id)].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (*it != kNoNode) stack.emplace_back(*it, new_id);
    }
  }
  if (verify_caches_ && !tree.VerifyCaches(*inst_)) {
    throw Error("tree cache verification failed");
  }
  return tree;
}

void TreeFaultInjector::ShiftCachedWeight(DecisionTree& tree, int v, Weight delta) {
  tree.node(v);
  tree.nodes_[static_cast<std::size_t>(v)].units += delta;
}

const HypothesisSet& ConsistentSet(const DecisionTree& tree, int v) {
  return tree.node(v).consistent;
}

CostBreakdown Cost(const DecisionTree& tree, const Instance& inst, const HypothesisSet& H) {
  if (H.universe() != inst.num_hypotheses()) throw Error("cost set has the wrong universe");
  if (tree.num_hypotheses() != inst.num_hypotheses()) throw Error("tree and instance disagree on n");
  CostBreakdown out;
  out.depth.assign(static_cast<std::size_t>(inst.num_hypotheses()), -1);
  H.ForEach([&](int h) {
    const int d = tree.node(tree.DeepestConsistentNode(inst, h)).depth;
    out.depth[static_cast<std::size_t>(h)] = d;
    out.depth_units += inst.units(h) * d;
    out.normalizer_units += inst.units(h);
  });
  out.normalizer = inst.ToProbability(out.normalizer_units);
  out.total = out.normalizer_units == 0 ? Rational(0)
                                        : MakeRational(out.depth_units, out.normalizer_units);
  return out;
}

CostBreakdown Cost(const DecisionTree& tree, const Instance& inst) {
  return Cost(tree, inst, tree.scope());
}

Weight InteriorWeightUnits(const DecisionTree& tree, const Instance& inst) {
  if (!IsComplete(tree, inst, tree.scope())) throw Error("identity requires completeness");
  Weight sum = 0;
  for (int v = 0; v < tree.num_nodes(); ++v) {
    if (!tree.node(v).is_leaf()) sum += tree.node(v).units;
  }
  return sum;
}

Rational InteriorWeightSum(const DecisionTree& tree, const Instance& inst) {
  const Weight scope_units = inst.units(tree.scope());
  if (scope_units == 0) return 0;
  return MakeRational(InteriorWeightUnits(tree, inst), scope_units);
}

bool IsComplete(const DecisionTree& tree, const Instance& inst, const HypothesisSet& H,
                std::optional<int> b) {
  std::vector<int> arrivals(static_cast<std::size_t>(tree.num_nodes()), 0);
  std::vector<int> end(static_cast<std::size_t>(inst.num_hypotheses()), kNoNode);
  H.ForEach([&](int h) {
    const int v = tree.DeepestConsistentNode(inst, h);
    end[static_cast<std::size_t>(h)] = v;
    ++arrivals[static_cast<std::size_t>(v)];
  });
  bool complete = true;
  H.ForEach([&](int h) {
    const int v = end[static_cast<std::size_t>(h)];
    const TreeNode& n = tree.node(v);
    const bool isolated = n.is_leaf() && arrivals[static_cast<std::size_t>(v)] == 1;
    const bool deep = b.has_value() && n.depth >= *b;
    if (!isolated && !deep) complete = false;
  });
  return complete;
}

int MajorityChild(const DecisionTree& tree, int v) {
  const TreeNode& n = tree.node(v);
  int best = kNoNode;
  Weight best_units = -1;
  for (int c : n.children) {
    if (c == kNoNode) continue;
    if (tree.node(c).units >= best_units) {
      best = c;
      best_units = tree.node(c).units;
    }
  }
  return best;
}

Weight MinorityUnits(const DecisionTree& tree, int v) {
  const int plus = MajorityChild(tree, v);
  if (plus == kNoNode) return 0;
  return tree.node(v).units - tree.node(plus).units;
}

namespace {

void CopyWithoutUseless(const DecisionTree& src, int v, TreeBuilder& builder, int target) {
  const TreeNode& n = src.node(v);
  if (n.is_leaf()) return;
  const int only = [&] {
    int present = kNoNode;
    for (int c : n.children) {
      if (c == kNoNode) continue;
      if (present != kNoNode) return kNoNode;
      present = c;
    }
    return present;
  }();
  if (only != kNoNode && src.node(only).consistent == n.consistent) {
    CopyWithoutUseless(src, only, builder, target);
    return;
  }
  const std::vector<int> made = builder.Split(target, n.test);
  for (std::size_t a = 0; a < n.children.size(); ++a) {
    if (n.children[a] != kNoNode) CopyWithoutUseless(src, n.children[a], builder, made[a]);
  }
}

}  // namespace

DecisionTree RemoveUselessNodes(const DecisionTree& tree, const Instance& inst) {
  TreeBuilder builder(inst, tree.scope());
  CopyWithoutUseless(tree, tree.root(), builder, builder.root());
  return builder.Build();
}

}  // namespace splitwise
