#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "common.h"
#include "splitwise/chains.h"
#include "splitwise/exact.h"
#include "splitwise/fulltree.h"
#include "splitwise/generators.h"
#include "splitwise/greedy.h"

namespace splitwise::cli {

const char* const kExperimentHeader =
    "instance_id,n,m,K,R,algo,cost,baseline_kind,baseline,ratio,bound_value,runtime_ms,status";

namespace {

struct Case {
  std::string id;
  Instance inst;
  // Stand-in for C_OPT when the exact solver is out of reach.
  std::optional<Rational> upper_baseline;
};

std::string Decimal(const Rational& value) { return ToDecimalString(value, 12); }

std::vector<Case> BuildCases(const ExperimentOptions& opt) {
  std::vector<Case> cases;
  if (opt.family == "grid") {
    for (int n : opt.sizes) {
      GridInstance grid = GenerateGridAdversarial(n, opt.c_star, GridRange::kRelaxed);
      cases.push_back({"grid-n" + std::to_string(n) + "-c" + std::to_string(opt.c_star), std::move(grid.instance),
                       Rational(4 * opt.c_star)});
    }
  } else if (opt.family == "random") {
    for (int n : opt.sizes) {
      const int bits = static_cast<int>(std::ceil(std::log2(std::max(n, 2))));
      for (int i = 0; i < opt.count; ++i) {
        RandomSpec spec;
        spec.n = n;
        spec.m = 2 * bits + 6;
        spec.k = opt.k;
        spec.seed = opt.seed * 1000003ULL + static_cast<std::uint64_t>(n) * 1009ULL + static_cast<std::uint64_t>(i);
        spec.profile = ParseWeightProfile(opt.profile);
        spec.ratio = ParseRational(opt.ratio);
        cases.push_back({"random-n" + std::to_string(n) + "-" + std::to_string(i), GenerateRandom(spec), std::nullopt});
      }
    }
  } else if (opt.family == "reduction") {
    for (int n0 : opt.sizes) {
      std::mt19937_64 rng(opt.seed * 1000003ULL + static_cast<std::uint64_t>(n0));
      std::vector<HypothesisSet> sets;
      for (int e = 0; e < n0; ++e) sets.push_back(HypothesisSet::Of(n0, {e}));
      std::bernoulli_distribution member(0.5);
      for (int j = 0; j < n0 / 2; ++j) {
        HypothesisSet set(n0);
        for (int e = 0; e < n0; ++e) {
          if (member(rng)) set.insert(e);
        }
        sets.push_back(std::move(set));
      }
      ReductionInstance red = GenerateSetCoverReduction(MakeUniformSetSystem(n0, std::move(sets)), opt.r);
      cases.push_back({"reduction-n0" + std::to_string(n0), std::move(red.instance), std::nullopt});
    }
  } else {
    throw ParseError("unknown experiment family: " + opt.family);
  }
  return cases;
}

}  // namespace

int RunExperiment(const ExperimentOptions& opt, std::ostream& out, std::ostream& err) {
  return HandleErrors(err, [&]() -> int {
    for (const std::string& algo : opt.algos) {
      if (algo != "greedy" && algo != "exact" && algo != "fulltree") throw ParseError("unknown algorithm: " + algo);
    }
    const std::vector<Case> cases = BuildCases(opt);
    out << kExperimentHeader << '\n';
    for (const Case& c : cases) {
      const Instance& inst = c.inst;
      const int n = inst.num_hypotheses();
      std::optional<Rational> c_opt;
      std::string baseline_kind = "none";
      std::optional<Rational> baseline;
      if (n <= opt.exact_cutoff) {
        try {
          c_opt = Cost(OptimalTree(inst, BudgetFromEnvironment()), inst).total;
          baseline_kind = "exact";
          baseline = c_opt;
        } catch (const BudgetExceededError&) {
        }
      }
      if (!baseline && c.upper_baseline) {
        baseline_kind = "upper_bound";
        baseline = c.upper_baseline;
      }
      std::string bound = "-";
      if (c_opt && *c_opt > 1) {
        const long double value = Theorem1Bound(n, inst.ToProbability(inst.min_units()),
                                                inst.ToProbability(inst.max_units()), *c_opt);
        bound = ToDecimalString(value / ToLongDouble(*c_opt), 12);
      }
      for (const std::string& algo : opt.algos) {
        std::ostringstream row;
        row << c.id << ',' << n << ',' << inst.num_tests() << ',' << inst.num_answers() << ','
            << Decimal(inst.WeightRatio()) << ',' << algo << ',';
        const auto start = std::chrono::steady_clock::now();
        std::optional<Rational> cost;
        try {
          if (algo == "greedy") {
            cost = Cost(BuildGreedyTree(inst), inst).total;
          } else if (algo == "exact") {
            cost = c_opt ? *c_opt : Cost(OptimalTree(inst, BudgetFromEnvironment()), inst).total;
          } else {
            FullTreeConfig cfg;
            cfg.alpha = opt.alpha;
            cfg.ratio_bound = inst.WeightRatio();
            cfg.budget = BudgetFromEnvironment();
            cost = Cost(FullTree(inst, cfg).tree, inst).total;
          }
        } catch (const BudgetExceededError&) {
        }
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        const std::string runtime =
            opt.timing ? ToDecimalString(static_cast<long double>(elapsed.count()) / 1000.0L, 6) : "-";
        if (!cost) {
          row << "-," << baseline_kind << ",-,-," << bound << ',' << runtime << ",skipped";
        } else {
          row << Decimal(*cost) << ',' << baseline_kind << ',' << (baseline ? Decimal(*baseline) : "-") << ','
              << (baseline && *baseline > 0 ? Decimal(*cost / *baseline) : "-") << ',' << bound << ',' << runtime
              << ",ok";
        }
        out << row.str() << '\n';
      }
    }
    return kOk;
  });
}

}  // namespace splitwise::cli
