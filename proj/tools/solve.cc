#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "common.h"
#include "splitwise/chains.h"
#include "splitwise/exact.h"
#include "splitwise/fulltree.h"
#include "splitwise/greedy.h"
#include "splitwise/instance_io.h"
#include "splitwise/tree_io.h"

namespace splitwise::cli {

std::string Render(const Rational& value, bool as_float) {
  return as_float ? ToDecimalString(value) : ToString(value);
}

SearchBudget BudgetFromEnvironment() {
  SearchBudget budget;
  if (const char* ms = std::getenv("SPLITWISE_BUDGET_MS"); ms != nullptr && *ms != '\0') {
    char* end = nullptr;
    const long long value = std::strtoll(ms, &end, 10);
    if (end == ms || *end != '\0' || value < 0) throw ParseError("SPLITWISE_BUDGET_MS must be a nonnegative integer");
    budget.time_limit = std::chrono::milliseconds(value);
  }
  return budget;
}

namespace {

void SaveTree(const std::string& path, const DecisionTree& tree) {
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    WriteTreeJson(file, tree);
  } else {
    WriteTreeText(file, tree);
  }
}

void PrintStats(std::ostream& out, const SearchStats& stats) {
  out << "expansions=" << stats.expansions << " memo_hits=" << stats.memo_hits
      << " memo_entries=" << stats.memo_entries << '\n';
}

int SolveFullTree(const SolveOptions& opt, const Instance& inst, std::ostream& out, std::ostream& err) {
  const bool uniform = opt.uniform || opt.algo == "fulltree-uniform";
  FullTreeConfig cfg;
  cfg.alpha = opt.alpha;
  cfg.epsilon = opt.epsilon;
  cfg.budget = BudgetFromEnvironment();
  cfg.ratio_bound = opt.ratio_bound ? ParseRational(*opt.ratio_bound) : inst.WeightRatio();
  if (opt.max_depth) cfg.depth_override = *opt.max_depth;
  const FullTreeResult result = uniform ? FullTreeUniform(inst, cfg) : FullTree(inst, cfg);
  const Rational cost = Cost(result.tree, inst).total;
  out << "C_FULLTREE=" << Render(cost, opt.as_float) << '\n';
  out << "recursion_depth=" << result.trace.max_level() << '\n';
  PrintStats(out, result.stats);

  std::optional<Rational> c_opt;
  if (inst.num_hypotheses() <= opt.baseline_cutoff) {
    c_opt = Cost(OptimalTree(inst, BudgetFromEnvironment()), inst).total;
    const long double factor = uniform ? (9.0L + opt.epsilon) / opt.alpha
                                       : 25.0L / opt.alpha + std::log2(ToLongDouble(cfg.ratio_bound));
    const long double bound = factor * ToLongDouble(*c_opt);
    out << "C_OPT=" << Render(*c_opt, opt.as_float) << '\n';
    out << "bound=" << ToDecimalString(bound) << " within_bound=" << (ToLongDouble(cost) <= bound ? "yes" : "no")
        << '\n';
  }
  WriteTrace(out, result.trace, opt.as_float);
  const AuditReport report = AuditTrace(result.trace, inst, result.tree, c_opt);
  report.Write(out, opt.as_float);
  if (opt.trace_path) {
    std::ofstream file(*opt.trace_path);
    if (!file) throw Error("cannot write " + *opt.trace_path);
    WriteTrace(file, result.trace, opt.as_float);
  }
  if (opt.out_path) SaveTree(*opt.out_path, result.tree);
  out << "tree:\n";
  WriteTreeText(out, result.tree);
  if (!report.passed()) {
    err << "fulltree audit failed: " << report.failures() << " check(s)\n";
    return kAuditFailure;
  }
  return kOk;
}

}  // namespace

int RunSolve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  return HandleErrors(err, [&]() -> int {
    const Instance inst = LoadInstance(opt.instance_path);
    const ValidationReport validation = ValidateInstance(inst);
    if (!validation.ok) {
      err << "invalid instance " << opt.instance_path << ":\n";
      for (const std::string& problem : validation.problems) err << "  " << problem << '\n';
      return kInvalidInput;
    }
    out << "n=" << inst.num_hypotheses() << " m=" << inst.num_tests() << " K=" << inst.num_answers() << '\n';
    if (opt.algo == "fulltree" || opt.algo == "fulltree-uniform") return SolveFullTree(opt, inst, out, err);

    DecisionTree tree;
    if (opt.algo == "greedy") {
      tree = BuildGreedyTree(inst);
      out << "C_G=" << Render(Cost(tree, inst).total, opt.as_float) << '\n';
    } else if (opt.algo == "exact" || opt.algo == "partial") {
      if (opt.algo == "partial" && !opt.max_depth) throw ParseError("--algo partial needs --max-depth");
      PartialTreeSolver solver(inst, BudgetFromEnvironment());
      const int full = inst.num_hypotheses() - 1;
      const int b = opt.max_depth ? *opt.max_depth : full;
      if (b < 0) throw ParseError("--max-depth must be nonnegative");
      tree = opt.max_depth ? solver.PartialTree(inst.AllHypotheses(), b) : solver.OptimalTree(inst.AllHypotheses());
      const Rational cost = Cost(tree, inst).total;
      if (IsComplete(tree, inst, inst.AllHypotheses(), std::nullopt)) {
        out << "C_OPT=" << Render(cost, opt.as_float) << '\n';
      } else {
        out << "C_OPT(b=" << b << ")=" << Render(cost, opt.as_float) << '\n';
      }
      PrintStats(out, solver.stats());
    } else {
      throw ParseError("unknown algorithm: " + opt.algo);
    }
    if (opt.out_path) SaveTree(*opt.out_path, tree);
    out << "tree:\n";
    WriteTreeText(out, tree);
    return kOk;
  });
}

}  // namespace splitwise::cli
