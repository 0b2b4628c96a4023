#include "splitwise/tree_io.h"

#include <istream>
#include <set>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "splitwise/errors.h"

namespace splitwise {
namespace {

using json = nlohmann::json;

HypothesisSet ScopeFromOneBased(const std::vector<int>& members, int n) {
  HypothesisSet scope(n);
  for (int h : members) {
    if (h < 1 || h > n) throw ParseError("scope member out of range");
    scope.insert(h - 1);
  }
  return scope;
}

json NodeToJson(const DecisionTree& tree, int v) {
  const TreeNode& n = tree.node(v);
  json out;
  if (n.is_leaf()) {
    json members = json::array();
    n.consistent.ForEach([&](int h) { members.push_back(h + 1); });
    out["leaf"] = std::move(members);
    return out;
  }
  out["test"] = n.test + 1;
  json children = json::array();
  for (std::size_t a = 0; a < n.children.size(); ++a) {
    if (n.children[a] == kNoNode) continue;
    children.push_back({{"answer", a + 1}, {"node", NodeToJson(tree, n.children[a])}});
  }
  out["children"] = std::move(children);
  return out;
}

void JsonToNode(const json& doc, const Instance& inst, TreeBuilder& builder, int target) {
  if (doc.contains("leaf")) {
    HypothesisSet listed = ScopeFromOneBased(doc.at("leaf").get<std::vector<int>>(), inst.num_hypotheses());
    if (!(listed == builder.node(target).consistent)) throw ParseError("leaf hypotheses do not match L(v)");
    return;
  }
  const int test = doc.at("test").get<int>() - 1;
  if (test < 0 || test >= inst.num_tests()) throw ParseError("test index out of range");
  const std::vector<int> made = builder.Split(target, test);
  int seen = 0;
  for (const auto& child : doc.at("children")) {
    const int a = child.at("answer").get<int>() - 1;
    if (a < 0 || a >= inst.num_answers() || made[static_cast<std::size_t>(a)] == kNoNode) {
      throw ParseError("child answer does not match any consistent hypothesis");
    }
    JsonToNode(child.at("node"), inst, builder, made[static_cast<std::size_t>(a)]);
    ++seen;
  }
  const int present = static_cast<int>(std::count_if(made.begin(), made.end(), [](int c) { return c != kNoNode; }));
  if (seen != present) throw ParseError("missing children in tree json");
}

}  // namespace

void WriteTreeText(std::ostream& out, const DecisionTree& tree) {
  out << "tree " << tree.num_hypotheses() << ' ' << tree.num_answers() << ' ' << tree.num_nodes() << '\n';
  out << "scope";
  tree.scope().ForEach([&](int h) { out << ' ' << h + 1; });
  out << '\n';
  for (int v = 0; v < tree.num_nodes(); ++v) {
    const TreeNode& n = tree.node(v);
    out << v << ' ' << n.depth << ' ';
    if (n.is_leaf()) {
      out << "leaf";
    } else {
      out << "test " << n.test + 1;
    }
    out << ' ';
    if (n.parent == kNoNode) {
      out << '-';
    } else {
      out << n.parent_answer + 1;
    }
    out << '\n';
  }
}

std::string TreeToText(const DecisionTree& tree) {
  std::ostringstream out;
  WriteTreeText(out, tree);
  return out.str();
}

DecisionTree ReadTreeText(std::istream& in, const Instance& inst) {
  std::string word;
  int n = 0, k = 0, count = 0;
  if (!(in >> word >> n >> k >> count) || word != "tree") throw ParseError("expected tree header");
  if (n != inst.num_hypotheses() || k != inst.num_answers()) throw ParseError("tree does not match instance");
  if (count < 1) throw ParseError("tree needs at least one node");
  std::string line;
  std::getline(in, line);
  if (!std::getline(in, line)) throw ParseError("expected scope line");
  std::istringstream scope_line(line);
  if (!(scope_line >> word) || word != "scope") throw ParseError("expected scope line");
  std::vector<int> members;
  for (int h; scope_line >> h;) members.push_back(h);
  TreeBuilder builder(inst, ScopeFromOneBased(members, n));

  // stack[d] = builder id of the most recent node at depth d.
  std::vector<int> stack;
  std::vector<std::vector<int>> made_children;
  std::set<int> claimed;
  int placed = 0;
  for (int i = 0; i < count; ++i) {
    int id = 0, depth = 0;
    std::string kind, parent_answer;
    if (!(in >> id >> depth >> kind)) throw ParseError("truncated tree body");
    if (id != i) throw ParseError("node ids must be preorder positions");
    int test = kLeaf;
    if (kind == "test") {
      if (!(in >> test)) throw ParseError("missing test index");
      --test;
    } else if (kind != "leaf") {
      throw ParseError("unknown node kind '" + kind + "'");
    }
    if (!(in >> parent_answer)) throw ParseError("missing parent answer");
    int target;
    if (depth == 0) {
      if (i != 0 || parent_answer != "-") throw ParseError("root must be the first node");
      target = builder.root();
    } else {
      if (depth > static_cast<int>(stack.size())) throw ParseError("depth jumps in preorder");
      const int parent = stack[static_cast<std::size_t>(depth - 1)];
      const int a = std::stoi(parent_answer) - 1;
      const auto& kids = made_children[static_cast<std::size_t>(parent)];
      if (kids.empty() || a < 0 || a >= k || kids[static_cast<std::size_t>(a)] == kNoNode) {
        throw ParseError("node " + std::to_string(i) + " hangs off an absent edge");
      }
      target = kids[static_cast<std::size_t>(a)];
    }
    if (!claimed.insert(target).second) throw ParseError("node " + std::to_string(i) + " repeats an edge");
    stack.resize(static_cast<std::size_t>(depth));
    stack.push_back(target);
    if (test != kLeaf) {
      if (test < 0 || test >= inst.num_tests()) throw ParseError("test index out of range");
      std::vector<int> kids = builder.Split(target, test);
      made_children.resize(std::max<std::size_t>(made_children.size(), static_cast<std::size_t>(target) + 1));
      made_children[static_cast<std::size_t>(target)] = kids;
      for (int c : kids) {
        if (c != kNoNode && static_cast<std::size_t>(c) >= made_children.size()) {
          made_children.resize(static_cast<std::size_t>(c) + 1);
        }
      }
    } else if (made_children.size() <= static_cast<std::size_t>(target)) {
      made_children.resize(static_cast<std::size_t>(target) + 1);
    }
    ++placed;
  }
  DecisionTree tree = builder.Build();
  if (tree.num_nodes() != placed) throw ParseError("tree body omits some nodes");
  return tree;
}

void WriteTreeJson(std::ostream& out, const DecisionTree& tree) {
  json doc;
  doc["n"] = tree.num_hypotheses();
  doc["k"] = tree.num_answers();
  json scope = json::array();
  tree.scope().ForEach([&](int h) { scope.push_back(h + 1); });
  doc["scope"] = std::move(scope);
  doc["root"] = NodeToJson(tree, tree.root());
  out << doc.dump(1) << '\n';
}

DecisionTree ReadTreeJson(std::istream& in, const Instance& inst) {
  try {
    json doc;
    in >> doc;
    if (doc.at("n").get<int>() != inst.num_hypotheses() || doc.at("k").get<int>() != inst.num_answers()) {
      throw ParseError("tree does not match instance");
    }
    TreeBuilder builder(inst, ScopeFromOneBased(doc.at("scope").get<std::vector<int>>(), inst.num_hypotheses()));
    JsonToNode(doc.at("root"), inst, builder, builder.root());
    return builder.Build();
  } catch (const json::exception& e) {
    throw ParseError(std::string("tree json: ") + e.what());
  }
}

}  // namespace splitwise
