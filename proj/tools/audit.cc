#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>

#include "common.h"
#include "splitwise/chains.h"
#include "splitwise/exact.h"
#include "splitwise/fulltree.h"
#include "splitwise/generators.h"
#include "splitwise/greedy.h"
#include "splitwise/instance_io.h"
#include "splitwise/mssc.h"
#include "splitwise/set_cover.h"
#include "splitwise/tree_io.h"

namespace splitwise::cli {
namespace {

const std::vector<std::string> kFamilies = {"identity",  "greedy",   "monotone", "theorem1",    "entropy",
                                            "imbalanced", "mssc",     "heavy",    "fulltree",    "rounding",
                                            "setcover",  "mssc-approx", "generators"};

struct Selection {
  std::vector<std::string> only;
  bool Has(const std::string& family) const {
    return only.empty() || std::find(only.begin(), only.end(), family) != only.end();
  }
};

RandomSpec CorpusSpec(std::uint64_t seed, int i) {
  RandomSpec spec;
  spec.n = 3 + i % 6;
  spec.m = std::min(8, spec.n + i % 3);
  spec.k = i % 4 == 3 ? 3 : 2;
  spec.seed = seed * 1000003ULL + static_cast<std::uint64_t>(i);
  spec.profile = static_cast<WeightProfile>(i % 3);
  spec.ratio = 2 + i % 5;
  return spec;
}

// Runs one family, turning structural exceptions into a failed flag.
void Guarded(AuditReport& report, const std::string& family, std::ostream& err, const std::function<void()>& body) {
  try {
    body();
  } catch (const BudgetExceededError&) {
    throw;
  } catch (const Error& e) {
    err << family << ": " << e.what() << '\n';
    report.AddFlag(family + ".structure", -1, false);
  }
}

AuditReport AuditInstance(const Instance& inst, const Selection& sel, bool inject_fault, std::ostream& err,
                          DecisionTree& greedy_out) {
  AuditReport report;
  DecisionTree greedy = BuildGreedyTree(inst);
  if (inject_fault) TreeFaultInjector::ShiftCachedWeight(greedy, greedy.root(), 1);
  greedy_out = greedy;
  const Rational c_greedy = Cost(greedy, inst).total;

  if (sel.Has("identity")) {
    Guarded(report, "identity", err, [&] {
      report.AddEq("identity.interior_weight", -1, inst.ToProbability(InteriorWeightUnits(greedy, inst)),
                   inst.ToProbability(Cost(greedy, inst).depth_units));
    });
  }
  if (sel.Has("greedy")) {
    report.AddFlag("greedy.choice", -1, !AuditGreedy(inst, greedy).has_value());
    report.AddFlag("greedy.caches", -1, greedy.VerifyCaches(inst));
    report.AddFlag("greedy.complete", -1, IsComplete(greedy, inst, inst.AllHypotheses(), std::nullopt));
  }
  if (sel.Has("monotone")) {
    report.AddEq("monotone.minority_increases", -1, Rational(CountMinorityIncreases(greedy)), Rational(0));
  }

  if (sel.Has("rounding") && inst.num_hypotheses() >= 2) {
    const Instance rounded = RoundWeights(inst);
    const Weight n = inst.num_hypotheses();
    report.AddLe("rounding.min_weight", -1, MakeRational(1, n * (n - 1)), rounded.ToProbability(rounded.min_units()));
    const Rational diff = Cost(greedy, rounded).total - c_greedy;
    report.AddLe("rounding.cost_shift", -1, abs(diff), Rational(1));
  }

  const bool needs_opt = sel.Has("theorem1") || sel.Has("entropy") || sel.Has("imbalanced") || sel.Has("mssc") ||
                         sel.Has("heavy") || sel.Has("fulltree");
  if (!needs_opt) return report;
  const DecisionTree optimal = OptimalTree(inst, BudgetFromEnvironment());
  const Rational c_opt = Cost(optimal, inst).total;
  const Rational p_min = inst.ToProbability(inst.min_units());
  const Rational p_max = inst.ToProbability(inst.max_units());
  const int n = inst.num_hypotheses();

  if (sel.Has("theorem1")) {
    report.AddLe("exact.below_greedy", -1, c_opt, c_greedy);
    if (c_opt > 1) {
      report.AddLe("theorem1.bound", -1, c_greedy, Theorem1Bound(n, p_min, p_max, c_opt));
      if (inst.IsUniform() && inst.num_answers() == 2) {
        report.AddLe("theorem1.uniform_binary", -1, c_greedy, UniformBinaryBound(n, c_opt));
      }
    }
  }
  if (sel.Has("fulltree")) {
    Guarded(report, "fulltree", err, [&] {
      FullTreeConfig cfg;
      cfg.alpha = 0.5;
      cfg.ratio_bound = inst.WeightRatio();
      cfg.budget = BudgetFromEnvironment();
      const bool uniform = inst.IsUniform();
      const FullTreeResult result = uniform ? FullTreeUniform(inst, cfg) : FullTree(inst, cfg);
      report.Merge(AuditTrace(result.trace, inst, result.tree, c_opt));
      const Rational cost = Cost(result.tree, inst).total;
      const long double factor =
          uniform ? (9.0L + cfg.epsilon) / cfg.alpha : 25.0L / cfg.alpha + std::log2(ToLongDouble(cfg.ratio_bound));
      report.AddLe("fulltree.approx", -1, cost, factor * ToLongDouble(c_opt));
    });
  }

  // The analysis takes delta = 1/C_OPT, which needs C_OPT > 1.
  if (c_opt <= 1 || inject_fault) return report;
  const bool any_chain = sel.Has("entropy") || sel.Has("imbalanced") || sel.Has("mssc") || sel.Has("heavy");
  if (!any_chain) return report;
  Guarded(report, "chains", err, [&] {
    const Classification labels = ClassifyVertices(inst, greedy, 1 / c_opt);
    if (sel.Has("entropy")) report.Merge(EntropyAudit(inst, greedy, labels));
    if (sel.Has("imbalanced")) report.Merge(ImbalancedAudit(inst, greedy, labels, c_opt));
    if (sel.Has("mssc")) {
      const ChainDecomposition chains = DecomposeChains(labels, greedy);
      report.Merge(ChainMsscAudit(inst, greedy, labels, chains, c_opt));
    }
    if (sel.Has("heavy")) report.Merge(HeavyPathAudit(inst, greedy, labels, optimal));
  });
  return report;
}

SetSystem RandomSetSystem(std::mt19937_64& rng, int universe, int sets, bool weighted) {
  SetSystem system;
  std::uniform_int_distribution<Weight> weight(1, weighted ? 20 : 1);
  for (int e = 0; e < universe; ++e) system.element_units.push_back(weight(rng));
  system.denominator = std::accumulate(system.element_units.begin(), system.element_units.end(), Weight{0});
  std::bernoulli_distribution member(0.35);
  for (int j = 0; j < sets; ++j) {
    HypothesisSet set(universe);
    for (int e = 0; e < universe; ++e) {
      if (member(rng)) set.insert(e);
    }
    system.sets.push_back(std::move(set));
  }
  std::uniform_int_distribution<int> pick(0, sets - 1);
  system.Uncoverable().ForEach([&](int e) { system.sets[static_cast<std::size_t>(pick(rng))].insert(e); });
  return system;
}

AuditReport AuditSetSystems(std::uint64_t seed, int count, const Selection& sel) {
  AuditReport report;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const int universe = 3 + i % 6;
    const int sets = 2 + i % 7;
    const SetSystem system = RandomSetSystem(rng, universe, sets, i % 2 == 1);
    if (sel.Has("setcover")) {
      const std::vector<int> cover = WeightedGreedyCover(system);
      const int opt = OptimalCoverSize(system);
      report.AddLe("setcover.greedy_bound", -1, static_cast<long double>(cover.size()),
                   GreedyCoverBound(system, opt));
    }
    if (sel.Has("mssc-approx")) {
      const MsscSolution greedy = MsscGreedy(system);
      const MsscSolution optimal = MsscOptimal(system);
      report.AddLe("mssc.flt", -1, MsscCost(system, greedy), 4 * MsscCost(system, optimal));
    }
  }
  return report;
}

AuditReport AuditGenerators() {
  AuditReport report;
  const GridInstance grid = GenerateGridAdversarial(16, 4);
  report.AddFlag("generators.grid_valid", -1, ValidateInstance(grid.instance).ok);
  const int root = GreedyChoice(grid.instance, grid.instance.AllHypotheses());
  report.AddFlag("generators.grid_root_type4", -1,
                 grid.test_type[static_cast<std::size_t>(root)] == GridTestType::kGoodSet);
  const SetSystem cover = MakeUniformSetSystem(2, {HypothesisSet::Of(2, {0}), HypothesisSet::Of(2, {1})});
  const ReductionInstance red = GenerateSetCoverReduction(cover, 0.4);
  report.AddEq("generators.reduction_sum", -1, red.instance.weight(red.instance.AllHypotheses()), Rational(1));
  report.AddEq("generators.reduction_ratio", -1, red.instance.WeightRatio(), 1 + MakeRational(red.n, red.ell));
  return report;
}

void Emit(std::ostream& out, const AuditReport& report, bool as_float, std::map<std::string, std::pair<int, int>>& tally) {
  for (const AuditCheck& check : report.checks()) {
    out << FormatAuditCheck(check, as_float) << '\n';
    auto& [checks, failures] = tally[check.name];
    ++checks;
    if (!check.pass) ++failures;
  }
}

}  // namespace

const std::vector<std::string>& AuditFamilies() { return kFamilies; }

int RunAudit(const AuditOptions& opt, std::ostream& out, std::ostream& err) {
  return HandleErrors(err, [&]() -> int {
    for (const std::string& family : opt.only) {
      if (std::find(kFamilies.begin(), kFamilies.end(), family) == kFamilies.end()) {
        throw ParseError("unknown audit family: " + family);
      }
    }
    const Selection sel{opt.only};
    std::map<std::string, std::pair<int, int>> tally;
    int failed_instances = 0;
    for (int i = 0; i < opt.count; ++i) {
      const RandomSpec spec = CorpusSpec(opt.seed, i);
      const Instance inst = GenerateRandom(spec);
      out << "# instance " << i << " seed=" << spec.seed << " n=" << spec.n << " m=" << spec.m << " K=" << spec.k
          << " profile=" << WeightProfileName(spec.profile) << '\n';
      DecisionTree greedy;
      const AuditReport report = AuditInstance(inst, sel, opt.inject_fault, err, greedy);
      Emit(out, report, opt.as_float, tally);
      if (!report.passed()) {
        ++failed_instances;
        std::filesystem::create_directories(opt.out_dir);
        const std::string stem = opt.out_dir + "/instance_" + std::to_string(i);
        SaveInstance(stem + ".dt", inst);
        std::ofstream tree_file(stem + ".tree");
        WriteTreeText(tree_file, greedy);
        err << "instance " << i << ": " << report.failures() << " failed check(s); saved " << stem
            << ".dt and .tree; repro: splitwise solve --algo greedy " << stem << ".dt\n";
      }
    }
    if (sel.Has("setcover") || sel.Has("mssc-approx")) {
      out << "# set systems seed=" << opt.seed << '\n';
      const AuditReport report = AuditSetSystems(opt.seed, opt.count, sel);
      Emit(out, report, opt.as_float, tally);
      if (!report.passed()) ++failed_instances;
    }
    if (sel.Has("generators")) {
      out << "# generators\n";
      const AuditReport report = AuditGenerators();
      Emit(out, report, opt.as_float, tally);
      if (!report.passed()) ++failed_instances;
    }
    int total_checks = 0;
    int total_failures = 0;
    for (const auto& [name, counts] : tally) {
      out << "summary " << name << " checks=" << counts.first << " failures=" << counts.second << '\n';
      total_checks += counts.first;
      total_failures += counts.second;
    }
    out << "summary total checks=" << total_checks << " failures=" << total_failures << '\n';
    return failed_instances == 0 ? kOk : kAuditFailure;
  });
}

}  // namespace splitwise::cli
