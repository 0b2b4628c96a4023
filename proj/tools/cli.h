#ifndef SPLITWISE_TOOLS_CLI_H_
#define SPLITWISE_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "splitwise/exact.h"

namespace splitwise::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInvalidInput = 2, kBudgetExceeded = 3, kAuditFailure = 4 };

// SPLITWISE_BUDGET_MS, when set, caps solver wall time.
SearchBudget BudgetFromEnvironment();

struct SolveOptions {
  std::string instance_path;
  std::string algo = "greedy";  // greedy | exact | partial | fulltree | fulltree-uniform
  std::optional<int> max_depth;
  double alpha = 0.5;
  double epsilon = 0.03;
  std::optional<std::string> ratio_bound;  // defaults to the instance's own ratio
  bool uniform = false;                    // same as --algo fulltree-uniform
  bool as_float = false;
  std::optional<std::string> out_path;     // tree file; .json selects the nested form
  std::optional<std::string> trace_path;
  int baseline_cutoff = 10;                // exact baseline for fulltree up to this n
};

int RunSolve(const SolveOptions& opt, std::ostream& out, std::ostream& err);

struct AuditOptions {
  std::uint64_t seed = 1;
  int count = 40;
  std::vector<std::string> only;  // family filter; empty runs everything
  bool inject_fault = false;
  bool as_float = false;
  std::string out_dir = "audit-failures";
};

// Family names accepted by --only.
const std::vector<std::string>& AuditFamilies();

int RunAudit(const AuditOptions& opt, std::ostream& out, std::ostream& err);

struct ExperimentOptions {
  std::string family = "random";  // grid | random | reduction
  std::vector<int> sizes;
  int c_star = 8;
  int count = 5;
  std::uint64_t seed = 1;
  int k = 2;
  std::string profile = "uniform";
  std::string ratio = "4";
  double r = 0.4;
  std::vector<std::string> algos{"greedy"};
  double alpha = 0.5;
  int exact_cutoff = 9;
  bool timing = false;
};

// Writes the CSV. Rows whose solver runs out of budget carry status=skipped.
int RunExperiment(const ExperimentOptions& opt, std::ostream& out, std::ostream& err);

extern const char* const kExperimentHeader;

struct GenOptions {
  std::string kind;  // grid | reduction | random
  int n = 16;
  int m = 8;
  int k = 2;
  int c_star = 4;
  bool relaxed = false;
  std::uint64_t seed = 1;
  std::string profile = "uniform";
  std::string ratio = "4";
  double skew = 0.5;
  std::string sets_path;
  double r = 0.4;
  bool json = false;
};

int RunGen(const GenOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace splitwise::cli

#endif  // SPLITWISE_TOOLS_CLI_H_
