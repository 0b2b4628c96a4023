#include "splitwise/fulltree.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "splitwise/greedy.h"

namespace splitwise {
namespace {

class FullTreeRunner {
 public:
  FullTreeRunner(const Instance& inst, const FullTreeConfig& cfg, RecursionTrace& trace)
      : inst_(inst), cfg_(cfg), trace_(trace), solver_(inst, cfg.budget) {}

  DecisionTree Run(const HypothesisSet& H, int level) {
    TraceRecord record;
    record.level = level;
    record.set = H;
    record.units = inst_.units(H);

    DecisionTree greedy = GreedyTree(H);
    const CostBreakdown greedy_cost = Cost(greedy, inst_, H);
    record.greedy_depth_units = greedy_cost.depth_units;
    record.greedy_cost = greedy_cost.total;

    const __int128 n = trace_.n;
    if (static_cast<__int128>(record.units) * n * n < static_cast<__int128>(trace_.total_units)) {
      record.decision = TraceDecision::kGreedySmallWeight;
      trace_.records.push_back(std::move(record));
      return greedy;
    }
    if (ToLongDouble(record.greedy_cost) >= trace_.threshold) {
      record.decision = TraceDecision::kGreedyThreshold;
      trace_.records.push_back(std::move(record));
      return greedy;
    }

    const int b = trace_.search_depth;
    DecisionTree partial = solver_.PartialTree(H, b);
    const CostBreakdown partial_cost = Cost(partial, inst_, H);
    record.decision = TraceDecision::kPartialExpanded;
    record.partial_depth_units = partial_cost.depth_units;
    record.partial_cost = partial_cost.total;
    trace_.records.push_back(std::move(record));

    TreeBuilder builder(inst_, H);
    const std::vector<int> placed = builder.Graft(builder.root(), partial);
    for (int v = 0; v < partial.num_nodes(); ++v) {
      const TreeNode& node = partial.node(v);
      if (!node.is_leaf() || node.consistent.size() <= 1) continue;
      if (node.depth < b) throw Error("PartialTree left an unresolved leaf above depth b");
      const DecisionTree sub = Run(node.consistent, level + 1);
      builder.Graft(placed[static_cast<std::size_t>(v)], sub);
    }
    return builder.Build();
  }

 private:
  DecisionTree GreedyTree(const HypothesisSet& H) {
    if (cfg_.mode == FullTreeMode::kUniform && H.size() < cfg_.brute_force_cutoff) {
      return solver_.OptimalTree(H);
    }
    return BuildGreedyTree(inst_, H);
  }

 public:
  const SearchStats& stats() const { return solver_.stats(); }

 private:
  const Instance& inst_;
  const FullTreeConfig& cfg_;
  RecursionTrace& trace_;
  PartialTreeSolver solver_;
};

void CheckConfig(const FullTreeConfig& cfg) {
  if (!(cfg.alpha > 0 && cfg.alpha < 1)) throw Error("alpha must lie in (0,1)");
  if (cfg.ratio_bound < 1) throw Error("ratio bound R must be at least 1");
  if (!(cfg.epsilon > 0)) throw Error("epsilon must be positive");
  if (cfg.depth_override && *cfg.depth_override < 0) throw Error("negative depth override");
}

}  // namespace

int RecursionTrace::max_level() const {
  int level = 0;
  for (const TraceRecord& r : records) level = std::max(level, r.level);
  return level;
}

long long GeneralDepthBudget(int n, double alpha, const Rational& ratio_bound) {
  const long double value = (12.0L * std::log2(static_cast<long double>(n)) +
                             std::log2(ToLongDouble(ratio_bound))) *
                            std::pow(static_cast<long double>(n), static_cast<long double>(alpha));
  return static_cast<long long>(std::ceil(value));
}

long long UniformDepthBudget(int n, double alpha, double epsilon) {
  const long double value = (4.0L + 2.0L * epsilon / 3.0L) * std::log2(static_cast<long double>(n)) *
                            std::pow(static_cast<long double>(n), static_cast<long double>(alpha));
  return static_cast<long long>(std::ceil(value));
}

long double RecursionThreshold(int n, double alpha, long long b, FullTreeMode mode) {
  const long double exponent = mode == FullTreeMode::kGeneral ? -alpha / 4.0L : -alpha / 3.0L;
  return std::pow(static_cast<long double>(n), exponent) * static_cast<long double>(b);
}

int RecursionDepthLimit(double alpha, FullTreeMode mode) {
  return static_cast<int>(std::ceil((mode == FullTreeMode::kGeneral ? 8.0 : 3.0) / alpha));
}

FullTreeResult FullTree(const Instance& inst, const FullTreeConfig& cfg) {
  CheckConfig(cfg);
  if (auto pair = FindUndistinguishedPair(inst, inst.AllHypotheses())) {
    throw InvalidInstanceError("instance is not valid", pair);
  }
  const int n = inst.num_hypotheses();
  if (cfg.mode == FullTreeMode::kGeneral) {
    if (inst.min_units() <= 0 || inst.WeightRatio() > cfg.ratio_bound) {
      throw InvalidInstanceError("weight ratio exceeds R = " + ToString(cfg.ratio_bound));
    }
  } else if (!inst.IsUniform()) {
    throw InvalidInstanceError("uniform mode requires uniform weights");
  }

  FullTreeResult result;
  RecursionTrace& trace = result.trace;
  trace.mode = cfg.mode;
  trace.alpha = cfg.alpha;
  trace.n = n;
  trace.total_units = inst.total_units();
  if (cfg.depth_override) {
    trace.depth_budget = *cfg.depth_override;
  } else {
    trace.depth_budget = cfg.mode == FullTreeMode::kGeneral
                             ? GeneralDepthBudget(n, cfg.alpha, cfg.ratio_bound)
                             : UniformDepthBudget(n, cfg.alpha, cfg.epsilon);
  }
  trace.search_depth = static_cast<int>(std::min<long long>(trace.depth_budget, std::max(n - 1, 0)));
  trace.threshold = RecursionThreshold(n, cfg.alpha, trace.depth_budget, cfg.mode);

  FullTreeRunner runner(inst, cfg, trace);
  result.tree = runner.Run(inst.AllHypotheses(), 0);
  result.stats = runner.stats();
  std::stable_sort(trace.records.begin(), trace.records.end(), [](const TraceRecord& a, const TraceRecord& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.set.front() < b.set.front();
  });
  return result;
}

FullTreeResult FullTreeUniform(const Instance& inst, FullTreeConfig cfg) {
  cfg.mode = FullTreeMode::kUniform;
  return FullTree(inst, cfg);
}

AuditReport AuditTrace(const RecursionTrace& trace, const Instance& inst, const DecisionTree& output,
                       const std::optional<Rational>& c_opt) {
  AuditReport report;
  const int max_level = trace.max_level();
  report.AddLe("fulltree.recursion_depth", -1, Rational(max_level),
               Rational(RecursionDepthLimit(trace.alpha, trace.mode)));

  Weight decomposed = 0;
  for (const TraceRecord& r : trace.records) {
    decomposed += r.decision == TraceDecision::kPartialExpanded ? r.partial_depth_units : r.greedy_depth_units;
  }
  const CostBreakdown cost = Cost(output, inst, inst.AllHypotheses());
  report.AddEq("fulltree.decomposition", -1, inst.ToProbability(decomposed), cost.total);
  report.AddFlag("fulltree.complete", -1, IsComplete(output, inst, inst.AllHypotheses()));

  std::vector<Weight> expanded_units(static_cast<std::size_t>(max_level) + 2, 0);
  std::vector<Weight> expanded_cost(static_cast<std::size_t>(max_level) + 1, 0);
  std::vector<HypothesisSet> level_union(static_cast<std::size_t>(max_level) + 1,
                                         HypothesisSet(inst.num_hypotheses()));
  std::vector<bool> level_disjoint(static_cast<std::size_t>(max_level) + 1, true);
  HypothesisSet greedy_union(inst.num_hypotheses());
  bool greedy_disjoint = true;
  for (const TraceRecord& r : trace.records) {
    const auto i = static_cast<std::size_t>(r.level);
    if (r.decision == TraceDecision::kPartialExpanded) {
      if (level_union[i].Intersects(r.set)) level_disjoint[i] = false;
      level_union[i] |= r.set;
      expanded_units[i] += r.units;
      expanded_cost[i] += r.partial_depth_units;
    } else {
      if (greedy_union.Intersects(r.set)) greedy_disjoint = false;
      greedy_union |= r.set;
    }
  }
  for (int i = 0; i <= max_level; ++i) {
    report.AddFlag("fulltree.disjoint_level", i, level_disjoint[static_cast<std::size_t>(i)]);
  }
  report.AddFlag("fulltree.disjoint_greedy", -1, greedy_disjoint);

  for (int i = 0; i <= max_level; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (c_opt && expanded_units[idx] > 0) {
      report.AddLe("fulltree.level_sum", i, inst.ToProbability(expanded_cost[idx]), *c_opt);
    }
    if (i + 1 <= max_level && expanded_units[idx] > 0) {
      const long double factor = std::pow(static_cast<long double>(trace.n),
                                          trace.mode == FullTreeMode::kGeneral ? -trace.alpha / 4.0L
                                                                               : -trace.alpha / 3.0L);
      report.AddLe("fulltree.weight_contraction", i, inst.ToProbability(expanded_units[idx + 1]),
                   factor * ToLongDouble(inst.ToProbability(expanded_units[idx])));
    }
  }
  return report;
}

std::string DecisionName(TraceDecision decision) {
  switch (decision) {
    case TraceDecision::kGreedySmallWeight:
      return "greedy-small-weight";
    case TraceDecision::kGreedyThreshold:
      return "greedy-threshold";
    case TraceDecision::kPartialExpanded:
      return "partial-expanded";
  }
  return "unknown";
}

void WriteTrace(std::ostream& out, const RecursionTrace& trace, bool as_float) {
  auto render = [&](const Rational& r) { return as_float ? ToDecimalString(r) : ToString(r); };
  out << "trace mode=" << (trace.mode == FullTreeMode::kGeneral ? "general" : "uniform")
      << " n=" << trace.n << " b=" << trace.depth_budget << " search_depth=" << trace.search_depth
      << " threshold=" << ToDecimalString(trace.threshold, 17) << '\n';
  for (const TraceRecord& r : trace.records) {
    out << "call level=" << r.level << " size=" << r.set.size() << " min=" << r.set.front() + 1
        << " pH=" << render(MakeRational(r.units, trace.total_units))
        << " decision=" << DecisionName(r.decision) << " CG=" << render(r.greedy_cost);
    if (r.partial_cost) out << " Cpartial=" << render(*r.partial_cost);
    out << " H=";
    bool first = true;
    r.set.ForEach([&](int h) {
      out << (first ? "" : ",") << h + 1;
      first = false;
    });
    out << '\n';
  }
}

}  // namespace splitwise
