#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dire/constraints.hpp"
#include "dire/synthetic.hpp"

namespace dire {

enum class DatasetKind { kSyn1, kSyn2, kFiles };
enum class SolverChoice { kAuto, kOracle, kHeuristic, kExhaustive };

struct ExperimentConfig {
  DatasetKind dataset = DatasetKind::kSyn1;
  std::vector<std::uint64_t> seeds;
  std::vector<RuleKind> rules;
  std::vector<int> mus{0};
  std::vector<int> pis{0};
  std::vector<double> phis;  // syn2; empty means 0.1..1.0
  std::vector<std::string> files;
  int m = 50;
  int n = 100;
  int k = 6;
  double timeout_seconds = 2000.0;
  int repetitions = 1;
  std::string output;
  unsigned threads = 1;
  SolverChoice solver = SolverChoice::kAuto;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  std::size_t max_committees = 1000;
};

/// Throws kInvalidArgument for empty seed/rule lists, a non-positive
/// timeout or repetition count, or a files dataset without files.
void validate_config(const ExperimentConfig& config);

struct ExperimentRow {
  std::string instance_id;
  int mu = 0;
  int pi = 0;
  std::optional<double> phi;
  RuleKind rule = RuleKind::kKBorda;
  std::string status;
  double elapsed_seconds = 0.0;
  std::optional<Score> score;
  std::optional<Score> unconstrained_score;
  std::optional<Fraction> utility_ratio;
  Fraction max_unsat_fraction;
  bool max_unsat_approximate = false;
  bool timed_out = false;
};

/// Fewest violated constraints over all k-committees, as a fraction of all
/// constraints. Throws kOracleCapExceeded above `cap`.
Fraction min_unsatisfied_fraction(const DiReInstance& instance, std::uint64_t cap);

/// Runs every (instance, rule) job; rows sorted by instance id, then rule.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

/// Header plus one line per row. Elapsed time is written only when
/// `with_timing` is set so reruns stay byte-identical.
std::string format_csv(const std::vector<ExperimentRow>& rows, bool with_timing);

}  // namespace dire
