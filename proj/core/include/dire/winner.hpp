#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dire/constraints.hpp"
#include "dire/diregraph.hpp"

namespace dire {

enum class SolveStatus { kOptimal, kFeasibleHeuristic, kInfeasible, kTimeout };
enum class SolveMode { kOracle, kTwoStage, kMu1Fast, kFpt };

std::string_view to_string(SolveStatus status);
std::string_view to_string(SolveMode mode);

struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  SolveMode mode = SolveMode::kTwoStage;
  std::optional<Committee> committee;
  std::optional<Score> score;
  std::optional<Score> unconstrained_score;
  std::optional<Fraction> utility_ratio;
  double elapsed_seconds = 0.0;
  std::uint64_t committees_examined = 0;
  bool timed_out = false;  // set when the search hit its budget
  bool unconstrained_exact = true;
  /// Every committee the solver produced, best first is not implied.
  std::vector<Committee> committees;
};

/// Scores every k-committee. Throws kOracleCapExceeded above `cap`.
SolveReport brute_force_oracle(const DiReInstance& instance,
                               std::uint64_t cap = kDefaultOracleCap);

/// All feasible committees by exhaustive enumeration, lexicographic order.
std::vector<Committee> brute_force_feasible(const DiReInstance& instance,
                                            std::uint64_t cap = kDefaultOracleCap);

/// Feasibility enumeration followed by score maximisation.
SolveReport solve_drcwd(const DiReInstance& instance, const SolverConfig& config);

/// One candidate attribute, no voter attributes, k-Borda. Throws
/// kPreconditionViolated otherwise.
SolveReport mu1_fast_path(const DiReInstance& instance);

/// Removes candidates whose set of winning committees is covered by another
/// candidate's. Returns the surviving candidates, ascending.
std::vector<CandidateId> fpt_prune_dominated(const DiReInstance& instance);

struct FptResult {
  std::vector<Committee> committees;  // padded to k, distinct
  std::uint64_t branches = 0;
  bool timed_out = false;
};

/// Representation-only instances with unit bounds: bounded search for
/// hitting sets of the winning committees. Throws kPreconditionViolated.
FptResult fpt_rep_solver(const DiReInstance& instance, const SolverConfig& config,
                         bool prune_dominated = true);

/// fpt_rep_solver wrapped into a report (best committee by score).
SolveReport fpt_solve(const DiReInstance& instance, const SolverConfig& config);

/// Fills in unconstrained_score and utility_ratio for a report that has a
/// score.
void attach_utility(const DiReInstance& instance, SolveReport& report);

}  // namespace dire
