#include "splitwise/chains.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "splitwise/errors.h"
#include "splitwise/greedy.h"
#include "splitwise/mssc.h"
#include "splitwise/set_cover.h"

namespace splitwise {
namespace {

constexpr int kLevelCap = 4096;

long double Log(const Rational& x) { return std::log(ToLongDouble(x)); }

Rational UnitsOverTotal(Weight units, const Instance& inst) { return inst.ToProbability(units); }

Weight MinUnitsIn(const Instance& inst, const HypothesisSet& scope) {
  Weight best = -1;
  scope.ForEach([&](int h) {
    if (best < 0 || inst.units(h) < best) best = inst.units(h);
  });
  return best;
}

Weight MaxUnitsIn(const Instance& inst, const HypothesisSet& scope) {
  Weight best = 0;
  scope.ForEach([&](int h) { best = std::max(best, inst.units(h)); });
  return best;
}

std::vector<int> HeavyOfChain(const Classification& labels, const std::vector<int>& chain) {
  std::vector<int> heavy;
  heavy.reserve(chain.size());
  for (int v : chain) heavy.push_back(labels.labels[static_cast<std::size_t>(v)].heavy);
  return heavy;
}

}  // namespace

bool Classification::IsImbalancedAt(int node, int s) const {
  const auto& levels = labels.at(static_cast<std::size_t>(node)).imbalanced_levels;
  return std::binary_search(levels.begin(), levels.end(), s);
}

Classification ClassifyVertices(const Instance& inst, const DecisionTree& tree, const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw Error("delta must lie in (0,1)");
  if (auto violation = AuditGreedy(inst, tree)) {
    throw Error("tree is not greedy at node " + std::to_string(violation->node));
  }
  const HypothesisSet& scope = tree.scope();
  const Weight min_units = MinUnitsIn(inst, scope);
  if (min_units <= 0) throw Error("classification needs positive weights");

  Classification out;
  out.delta = delta;
  const Weight D = inst.total_units();
  out.s_max = std::log(static_cast<long double>(D) / static_cast<long double>(min_units)) / -Log(delta);

  // delta = a/b; delta^s >= p_min  <=>  a^s * D >= min_units * b^s.
  const BigInt a = numerator(delta);
  const BigInt b = denominator(delta);
  std::vector<BigInt> a_pow{1}, b_pow{1};
  int exact_levels = 0;
  while (exact_levels < kLevelCap) {
    const BigInt next_a = a_pow.back() * a;
    const BigInt next_b = b_pow.back() * b;
    if (next_a * D < BigInt(min_units) * next_b) break;
    a_pow.push_back(next_a);
    b_pow.push_back(next_b);
    ++exact_levels;
  }
  const int ceil_levels = static_cast<int>(std::min<long double>(std::ceil(out.s_max), kLevelCap));
  out.max_level = std::max(exact_levels, ceil_levels);
  while (static_cast<int>(a_pow.size()) <= out.max_level) {
    a_pow.push_back(a_pow.back() * a);
    b_pow.push_back(b_pow.back() * b);
  }

  out.labels.resize(static_cast<std::size_t>(tree.num_nodes()));
  for (int v = 0; v < tree.num_nodes(); ++v) {
    const TreeNode& n = tree.node(v);
    VertexLabel& label = out.labels[static_cast<std::size_t>(v)];
    label.node = v;
    label.units = n.units;
    label.interior = !n.is_leaf();
    if (!label.interior) {
      label.balanced = false;
      continue;
    }
    label.minority_units = MinorityUnits(tree, v);
    for (int s = 1; s <= out.max_level; ++s) {
      const BigInt threshold = a_pow[static_cast<std::size_t>(s)] * D;
      const BigInt& scale = b_pow[static_cast<std::size_t>(s)];
      if (BigInt(label.minority_units) * scale <= threshold && BigInt(label.units) * scale > 2 * threshold) {
        label.imbalanced_levels.push_back(s);
      }
    }
    label.balanced = label.imbalanced_levels.empty();
    int heavy_count = 0;
    n.consistent.ForEach([&](int h) {
      if (inst.units(h) > label.minority_units) {
        ++heavy_count;
        label.heavy = h;
        label.heavy_units = inst.units(h);
      }
    });
    if (heavy_count > 1) throw Error("two heavy hypotheses at node " + std::to_string(v));
  }

  out.heavy_top.assign(static_cast<std::size_t>(inst.num_hypotheses()), kNoNode);
  out.leaf_of.assign(static_cast<std::size_t>(inst.num_hypotheses()), kNoNode);
  scope.ForEach([&](int h) {
    const int leaf = tree.DeepestConsistentNode(inst, h);
    out.leaf_of[static_cast<std::size_t>(h)] = leaf;
    const std::vector<int> path = tree.PathTo(leaf);
    std::size_t top = path.size();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (out.labels[static_cast<std::size_t>(path[i])].heavy == h) {
        top = i;
        break;
      }
    }
    if (top == path.size()) return;
    out.heavy_top[static_cast<std::size_t>(h)] = path[top];
    for (std::size_t i = top; i + 1 < path.size(); ++i) {
      if (out.labels[static_cast<std::size_t>(path[i])].heavy != h) {
        throw Error("gap on the heavy path of hypothesis " + std::to_string(h));
      }
      if (MajorityChild(tree, path[i]) != path[i + 1]) {
        throw Error("minority edge on the heavy path of hypothesis " + std::to_string(h));
      }
    }
  });
  // Heavy vertices off the path of their hypothesis would be a bookkeeping bug.
  for (const VertexLabel& label : out.labels) {
    if (label.heavy >= 0 && !tree.IsAncestor(label.node, out.leaf_of[static_cast<std::size_t>(label.heavy)])) {
      throw Error("heavy vertex off its hypothesis path");
    }
  }
  return out;
}

ChainDecomposition DecomposeChains(const Classification& labels, const DecisionTree& tree) {
  ChainDecomposition out;
  out.delta = labels.delta;
  out.s_max = labels.s_max;
  out.chains.resize(static_cast<std::size_t>(labels.max_level));
  for (int s = 1; s <= labels.max_level; ++s) {
    auto& level = out.chains[static_cast<std::size_t>(s - 1)];
    int imbalanced = 0;
    int covered = 0;
    for (int v = 0; v < tree.num_nodes(); ++v) {
      if (!labels.IsImbalancedAt(v, s)) continue;
      ++imbalanced;
      // Item (i): only the majority child may be imbalanced.
      const int plus = MajorityChild(tree, v);
      for (int c : tree.node(v).children) {
        if (c != kNoNode && c != plus && labels.IsImbalancedAt(c, s)) {
          throw Error("imbalanced minority child at node " + std::to_string(c) + ", level " + std::to_string(s));
        }
      }
      // Item (ii): the nearest imbalanced proper ancestor is the parent.
      const int parent = tree.node(v).parent;
      int ancestor = parent;
      while (ancestor != kNoNode && !labels.IsImbalancedAt(ancestor, s)) ancestor = tree.node(ancestor).parent;
      if (ancestor != kNoNode && ancestor != parent) {
        throw Error("imbalanced vertex " + std::to_string(v) + " skips a level-" + std::to_string(s) + " gap");
      }
      if (ancestor != kNoNode) continue;
      std::vector<int> chain{v};
      for (int u = plus; u != kNoNode && labels.IsImbalancedAt(u, s); u = MajorityChild(tree, u)) {
        chain.push_back(u);
      }
      covered += static_cast<int>(chain.size());
      level.push_back(std::move(chain));
    }
    if (covered != imbalanced) throw Error("level-" + std::to_string(s) + " chains do not partition");
  }
  return out;
}

int CountMinorityIncreases(const DecisionTree& tree) {
  int count = 0;
  for (int v = 1; v < tree.num_nodes(); ++v) {
    if (MinorityUnits(tree, v) > MinorityUnits(tree, tree.node(v).parent)) ++count;
  }
  return count;
}

long double Theorem1Bound(int n, const Rational& p_min, const Rational& p_max, const Rational& c_opt) {
  (void)n;
  if (c_opt <= 1) throw Error("bound undefined");
  const long double c = ToLongDouble(c_opt);
  return (12.0L * std::log2(ToLongDouble(1 / p_min)) / std::log2(c) + Log(p_max / p_min)) * c;
}

long double UniformBinaryBound(int n, const Rational& c_opt) {
  if (c_opt <= 1) throw Error("bound undefined");
  const long double c = ToLongDouble(c_opt);
  return 6.0L * std::log2(static_cast<long double>(n)) / std::log2(c) * c;
}

AuditReport EntropyAudit(const Instance& inst, const DecisionTree& tree, const Classification& labels) {
  AuditReport report;
  const int n = tree.scope().size();
  Weight balanced = 0;
  Weight imbalanced = 0;
  bool minority_ok = true;
  for (const VertexLabel& label : labels.labels) {
    if (!label.interior) continue;
    if (label.balanced) {
      balanced += label.units;
      // p^- >= (delta/2) p(v)
      if (2 * Rational(label.minority_units) < labels.delta * label.units) minority_ok = false;
    } else {
      imbalanced += label.units;
    }
  }
  const long double two_over = ToLongDouble(2 / labels.delta);
  const long double rhs = n <= 1 ? 0.0L : std::log(static_cast<long double>(n)) / std::log(two_over) * two_over;
  const Rational normalizer = inst.weight(tree.scope());
  report.AddLe("entropy.balanced_weight", -1, UnitsOverTotal(balanced, inst) / normalizer, rhs);
  report.AddFlag("entropy.balanced_minority", -1, minority_ok);
  report.AddEq("entropy.partition", -1, Rational(balanced + imbalanced), Rational(InteriorWeightUnits(tree, inst)));
  return report;
}

AuditReport ImbalancedAudit(const Instance& inst, const DecisionTree& tree, const Classification& labels,
                            const Rational& c_opt) {
  AuditReport report;
  const int n = tree.scope().size();
  Weight imbalanced = 0;
  Weight heavy = 0;
  for (const VertexLabel& label : labels.labels) {
    if (label.interior && !label.balanced) imbalanced += label.units;
    heavy += label.heavy_units;
  }
  const Rational lhs = UnitsOverTotal(imbalanced, inst);
  const Rational q_sum = UnitsOverTotal(heavy, inst);
  const long double log_n = std::log(static_cast<long double>(n));
  const long double log_inv_delta = -Log(labels.delta);
  const long double c = ToLongDouble(c_opt);
  const bool uniform_binary = inst.IsUniform() && inst.num_answers() == 2;

  if (uniform_binary) {
    report.AddLe("sum3.uniform", -1, lhs, 4.0L * log_n / log_inv_delta * c);
  }
  report.AddLe("sum3.weighted", -1, lhs, 4.0L * labels.s_max * (c + 1.0L) + ToLongDouble(q_sum));
  const long double ratio = static_cast<long double>(MaxUnitsIn(inst, tree.scope())) /
                            static_cast<long double>(MinUnitsIn(inst, tree.scope()));
  report.AddLe("sum4.heavy", -1, q_sum, (1.0L + std::log(ratio)) * c);

  if (uniform_binary && c_opt > 1 && labels.delta * c_opt == 1) {
    const long double two_over = ToLongDouble(2 / labels.delta);
    const long double assembled = log_n / std::log(two_over) * two_over + 4.0L * log_n / log_inv_delta * c;
    const Rational c_greedy = Cost(tree, inst).total;
    report.AddLe("final.greedy_vs_assembled", -1, c_greedy, assembled);
    report.AddLe("final.assembled_vs_bound", -1, assembled, UniformBinaryBound(n, c_opt));
  }
  return report;
}

bool IsNontrivialBinary(const Instance& inst) {
  if (inst.num_answers() != 2) return false;
  for (int j = 0; j < inst.num_tests(); ++j) {
    int ones = 0;
    for (Answer a : inst.test(j)) ones += a;
    if (ones >= 2 && inst.num_hypotheses() - ones >= 2) return true;
  }
  return false;
}

AuditReport ChainMsscAudit(const Instance& inst, const DecisionTree& tree, const Classification& labels,
                           const ChainDecomposition& chains, const Rational& c_opt) {
  AuditReport report;
  const bool uniform_form = inst.IsUniform() && IsNontrivialBinary(inst);
  for (std::size_t level = 0; level < chains.chains.size(); ++level) {
    const int s = static_cast<int>(level) + 1;
    if (chains.chains[level].empty()) continue;
    Rational opt_sum = 0;
    Rational opt_sum_tight = 0;
    for (const std::vector<int>& chain : chains.chains[level]) {
      const InducedMssc induced = BuildInducedMssc(inst, tree, chain);
      const std::vector<int> heavy_of = HeavyOfChain(labels, chain);
      const MsscSolution sigma = ChainGreedySolution(induced, tree, chain, heavy_of);
      Weight chain_units = 0;
      for (int v : chain) {
        const VertexLabel& label = labels.labels[static_cast<std::size_t>(v)];
        chain_units += label.units - label.heavy_units;
      }
      const Rational greedy_cost = MsscCost(induced.instance, sigma);
      report.AddFlag("mssc.chain_sigma_greedy", s, IsGreedySolution(induced.instance, sigma));
      report.AddLe("mssc.chain_weight", s, UnitsOverTotal(chain_units, inst), greedy_cost);
      const Rational opt_cost = MsscCost(induced.instance, MsscOptimal(induced.instance));
      report.AddLe("mssc.greedy_vs_opt", s, greedy_cost, 4 * opt_cost);
      opt_sum += opt_cost;
      opt_sum_tight += opt_cost - UnitsOverTotal(MaxUnitsIn(inst, tree.node(chain.front()).consistent), inst);
    }
    report.AddLe("mssc.level_sum_tight", s, opt_sum_tight, c_opt);
    report.AddLe("mssc.level_sum", s, opt_sum, c_opt + 1);
    if (uniform_form) report.AddLe("mssc.level_sum_uniform", s, opt_sum, c_opt);
  }
  return report;
}

AuditReport HeavyPathAudit(const Instance& inst, const DecisionTree& greedy_tree, const Classification& labels,
                           const DecisionTree& optimal_tree) {
  AuditReport report;
  const HypothesisSet& scope = greedy_tree.scope();
  const long double ratio = static_cast<long double>(MaxUnitsIn(inst, scope)) /
                            static_cast<long double>(MinUnitsIn(inst, scope));
  Weight q_units = 0;
  for (const VertexLabel& label : labels.labels) q_units += label.heavy_units;
  BigInt path_units = 0;

  bool greedy_ok = true;
  scope.ForEach([&](int h) {
    const int top = labels.heavy_top[static_cast<std::size_t>(h)];
    if (top == kNoNode) return;
    const int bottom = labels.leaf_of[static_cast<std::size_t>(h)];
    const int length = greedy_tree.node(bottom).depth - greedy_tree.node(top).depth;
    path_units += BigInt(inst.units(h)) * length;
    const int d_opt = optimal_tree.node(optimal_tree.DeepestConsistentNode(inst, h)).depth;
    report.AddLe("heavy.path_bound", h + 1, static_cast<long double>(length),
                 (1.0L + std::log(ratio)) * static_cast<long double>(d_opt));

    // Set cover over L(top) minus h with A_j = I^-_{j,L(top)} restricted.
    const HypothesisSet& at_top = greedy_tree.node(top).consistent;
    HypothesisSet universe = at_top;
    universe.erase(h);
    const std::vector<int> members = universe.ToVector();
    SetSystem system;
    system.denominator = inst.total_units();
    for (int g : members) system.element_units.push_back(inst.units(g));
    for (int j = 0; j < inst.num_tests(); ++j) {
      const SplitProfile profile = ComputeSplitProfile(inst, at_top, j);
      HypothesisSet set(static_cast<int>(members.size()));
      for (std::size_t e = 0; e < members.size(); ++e) {
        if (inst.answer(j, members[e]) != profile.majority_answer) set.insert(static_cast<int>(e));
      }
      system.sets.push_back(std::move(set));
    }
    // The greedy path's tests, read as a cover, pick the heaviest set each step.
    HypothesisSet remaining = system.Universe();
    for (int v = top; v != bottom; v = MajorityChild(greedy_tree, v)) {
      const int test = greedy_tree.node(v).test;
      Weight best = 0;
      for (const HypothesisSet& set : system.sets) best = std::max(best, system.units(set & remaining));
      if (system.units(system.sets[static_cast<std::size_t>(test)] & remaining) != best) greedy_ok = false;
      remaining -= system.sets[static_cast<std::size_t>(test)];
    }
    if (!remaining.empty()) greedy_ok = false;
    if (system.num_sets() <= 20) {
      const int opt = OptimalCoverSize(system);
      report.AddLe("heavy.cover_vs_depth", h + 1, Rational(opt), Rational(d_opt));
      report.AddLe("heavy.cover_bound", h + 1, static_cast<long double>(length), GreedyCoverBound(system, opt));
    }
  });
  report.AddFlag("heavy.path_is_greedy_cover", -1, greedy_ok);
  report.AddEq("heavy.q_identity", -1, Rational(q_units), Rational(path_units));
  return report;
}

}  // namespace splitwise
