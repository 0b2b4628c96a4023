#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cli.h"

namespace cli = splitwise::cli;

namespace {

// Sends output to --out when given, stdout otherwise.
int WithOutput(const std::string& path, const std::function<int(std::ostream&)>& run) {
  if (path.empty() || path == "-") return run(std::cout);
  std::ofstream file(path);
  if (!file) {
    std::cerr << "cannot write " << path << '\n';
    return cli::kInvalidInput;
  }
  return run(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitwise: greedy and exact decision trees for hypothesis identification"};
  app.require_subcommand(1);

  cli::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Build a tree for an instance file");
  solve_cmd->add_option("instance", solve.instance_path, "Instance file (.json for the structured form)")->required();
  solve_cmd->add_option("--algo", solve.algo, "greedy | exact | partial | fulltree | fulltree-uniform");
  solve_cmd->add_option("--max-depth", solve.max_depth, "Depth budget b for exact/partial, override for fulltree");
  solve_cmd->add_option("--alpha", solve.alpha, "FullTree alpha in (0,1)");
  solve_cmd->add_option("--eps", solve.epsilon, "Uniform FullTree epsilon");
  solve_cmd->add_option("--ratio-bound", solve.ratio_bound, "R for general FullTree (default: the instance ratio)");
  solve_cmd->add_flag("--uniform", solve.uniform, "Uniform FullTree variant");
  solve_cmd->add_flag("--float", solve.as_float, "Render values as decimals");
  solve_cmd->add_option("--out", solve.out_path, "Write the tree here");
  solve_cmd->add_option("--trace", solve.trace_path, "Write the FullTree recursion trace here");

  cli::AuditOptions audit;
  std::string audit_report;
  auto* audit_cmd = app.add_subcommand("audit", "Run the audit battery on seeded instances");
  audit_cmd->add_option("--seed", audit.seed, "Corpus seed");
  audit_cmd->add_option("--count", audit.count, "Number of random instances");
  audit_cmd->add_option("--only", audit.only, "Restrict to these families")->delimiter(',');
  audit_cmd->add_flag("--inject-fault", audit.inject_fault, "Corrupt a cached weight in every greedy tree");
  audit_cmd->add_flag("--float", audit.as_float, "Render values as decimals");
  audit_cmd->add_option("--out", audit_report, "Write the report here instead of stdout");
  audit_cmd->add_option("--failures-dir", audit.out_dir, "Where failing instances and trees are saved");

  cli::ExperimentOptions experiment;
  std::string experiment_out;
  auto* experiment_cmd = app.add_subcommand("experiment", "Run a sweep and write CSV");
  experiment_cmd->add_option("--family", experiment.family, "grid | random | reduction");
  std::string sizes;
  experiment_cmd->add_option("--sizes", sizes, "Comma-separated n values (n0 for reduction); empty for none");
  experiment_cmd->add_option("--c-star", experiment.c_star, "Grid columns");
  experiment_cmd->add_option("--count", experiment.count, "Random instances per size");
  experiment_cmd->add_option("--seed", experiment.seed, "Sweep seed");
  experiment_cmd->add_option("--k", experiment.k, "Answers per test (random family)");
  experiment_cmd->add_option("--profile", experiment.profile, "uniform | skewed | two-tier");
  experiment_cmd->add_option("--ratio", experiment.ratio, "Two-tier heavy/light ratio");
  experiment_cmd->add_option("--r", experiment.r, "Reduction exponent in (0,1)");
  experiment_cmd->add_option("--algo", experiment.algos, "greedy,exact,fulltree")->delimiter(',');
  experiment_cmd->add_option("--alpha", experiment.alpha, "FullTree alpha");
  experiment_cmd->add_option("--exact-cutoff", experiment.exact_cutoff, "Largest n solved exactly");
  experiment_cmd->add_flag("--timing", experiment.timing, "Fill runtime_ms (makes output nondeterministic)");
  experiment_cmd->add_option("--out", experiment_out, "CSV path");

  cli::GenOptions gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen.kind, "grid | reduction | random")->required();
  gen_cmd->add_option("--n", gen.n, "Hypotheses");
  gen_cmd->add_option("--m", gen.m, "Tests (random)");
  gen_cmd->add_option("--k", gen.k, "Answers per test (random)");
  gen_cmd->add_option("--c-star", gen.c_star, "Grid columns");
  gen_cmd->add_flag("--relaxed", gen.relaxed, "Allow c_star below log2 n");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--profile", gen.profile, "uniform | skewed | two-tier");
  gen_cmd->add_option("--ratio", gen.ratio, "Two-tier heavy/light ratio");
  gen_cmd->add_option("--skew", gen.skew, "Skewed profile gamma shape");
  gen_cmd->add_option("--sets", gen.sets_path, "Set-cover instance file (reduction)");
  gen_cmd->add_option("--r", gen.r, "Reduction exponent in (0,1)");
  gen_cmd->add_flag("--json", gen.json, "Write the structured form");
  gen_cmd->add_option("--out", gen_out, "Instance path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kInvalidInput;
  }

  if (*solve_cmd) {
    return cli::RunSolve(solve, std::cout, std::cerr);
  }
  if (*audit_cmd) {
    return WithOutput(audit_report, [&](std::ostream& out) { return cli::RunAudit(audit, out, std::cerr); });
  }
  if (*experiment_cmd) {
    std::stringstream list(sizes);
    for (std::string item; std::getline(list, item, ',');) {
      if (item.empty()) continue;
      try {
        experiment.sizes.push_back(std::stoi(item));
      } catch (const std::exception&) {
        std::cerr << "invalid size: " << item << '\n';
        return cli::kInvalidInput;
      }
    }
    return WithOutput(experiment_out,
                      [&](std::ostream& out) { return cli::RunExperiment(experiment, out, std::cerr); });
  }
  return WithOutput(gen_out, [&](std::ostream& out) { return cli::RunGen(gen, out, std::cerr); });
}
