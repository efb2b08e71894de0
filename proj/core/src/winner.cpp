#include "dire/winner.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "dire/combinatorics.hpp"

namespace dire {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kFeasibleHeuristic: return "feasible-heuristic";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "infeasible";
}

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::kOracle: return "oracle";
    case SolveMode::kTwoStage: return "two-stage";
    case SolveMode::kMu1Fast: return "mu1-fast";
    case SolveMode::kFpt: return "fpt";
  }
  return "two-stage";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Scores committees under the instance rule, with a fast path for k-Borda.
class CommitteeScorer {
 public:
  explicit CommitteeScorer(const DiReInstance& instance)
      : instance_(instance),
        scores_(candidate_scores(instance.profile(),
                                 instance.rule().scoring_for(instance.candidate_count()))) {}

  Score operator()(const Committee& committee) const {
    if (instance_.rule().kind == RuleKind::kKBorda) {
      Score total = 0;
      for (CandidateId c : committee) total += scores_[static_cast<std::size_t>(c)];
      return total;
    }
    return score_committee(instance_.profile(), instance_.rule(), committee);
  }

  std::span<const Score> candidate_scores_view() const { return scores_; }

 private:
  const DiReInstance& instance_;
  std::vector<Score> scores_;
};

// Membership table for quick constraint checks during enumeration.
class ConstraintChecker {
 public:
  explicit ConstraintChecker(const DiReInstance& instance) : m_(instance.candidate_count()) {
    for (const auto& constraint : instance.constraints()) {
      std::vector<char> member(static_cast<std::size_t>(m_), 0);
      for (CandidateId c : constraint.domain) member[static_cast<std::size_t>(c)] = 1;
      members_.push_back(std::move(member));
      bounds_.push_back(constraint.bound);
    }
  }

  bool ok(std::span<const CandidateId> committee) const {
    for (std::size_t i = 0; i < members_.size(); ++i) {
      int count = 0;
      for (CandidateId c : committee) count += members_[i][static_cast<std::size_t>(c)];
      if (count < bounds_[i]) return false;
    }
    return true;
  }

 private:
  int m_;
  std::vector<std::vector<char>> members_;
  std::vector<int> bounds_;
};

void check_oracle_scale(const DiReInstance& instance, std::uint64_t cap) {
  const auto total = binomial(static_cast<std::uint64_t>(instance.candidate_count()),
                              static_cast<std::uint64_t>(instance.k()));
  if (total > cap) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "C(" + std::to_string(instance.candidate_count()) + ", " +
                    std::to_string(instance.k()) + ") = " + std::to_string(total) +
                    " exceeds the oracle cap " + std::to_string(cap));
  }
}

std::vector<CandidateId> all_candidates(int m) {
  std::vector<CandidateId> ids(static_cast<std::size_t>(m));
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

// Keeps the higher score; equal scores keep the lexicographically least.
bool better(Score score, const Committee& committee, const SolveReport& report) {
  if (!report.score) return true;
  if (score != *report.score) return score > *report.score;
  return committee < *report.committee;
}

}  // namespace

void attach_utility(const DiReInstance& instance, SolveReport& report) {
  if (!report.score) return;
  const auto winner = unconstrained_winner(instance.profile(), instance.rule(), instance.k(),
                                           instance.options().oracle_cap);
  report.unconstrained_exact = winner.exact;
  const Score denominator = std::max(winner.score, *report.score);
  report.unconstrained_score = denominator;
  report.utility_ratio = denominator == 0 ? Fraction{1, 1} : Fraction::make(*report.score, denominator);
}

SolveReport brute_force_oracle(const DiReInstance& instance, std::uint64_t cap) {
  const auto start = Clock::now();
  check_oracle_scale(instance, cap);
  const ConstraintChecker checker(instance);
  const CommitteeScorer scorer(instance);
  SolveReport report;
  report.mode = SolveMode::kOracle;
  const auto ids = all_candidates(instance.candidate_count());
  for_each_combination<CandidateId>(ids, static_cast<std::size_t>(instance.k()),
                                    [&](std::span<const CandidateId> members) {
                                      ++report.committees_examined;
                                      if (!checker.ok(members)) return true;
                                      Committee committee(
                                          std::vector<CandidateId>(members.begin(), members.end()));
                                      const Score score = scorer(committee);
                                      if (better(score, committee, report)) {
                                        report.score = score;
                                        report.committee = std::move(committee);
                                      }
                                      return true;
                                    });
  report.status = report.committee ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
  if (report.committee) report.committees.push_back(*report.committee);
  attach_utility(instance, report);
  report.elapsed_seconds = seconds_since(start);
  return report;
}

std::vector<Committee> brute_force_feasible(const DiReInstance& instance, std::uint64_t cap) {
  check_oracle_scale(instance, cap);
  const ConstraintChecker checker(instance);
  std::vector<Committee> result;
  const auto ids = all_candidates(instance.candidate_count());
  for_each_combination<CandidateId>(ids, static_cast<std::size_t>(instance.k()),
                                    [&](std::span<const CandidateId> members) {
                                      if (checker.ok(members)) {
                                        result.emplace_back(std::vector<CandidateId>(
                                            members.begin(), members.end()));
                                      }
                                      return true;
                                    });
  return result;
}

SolveReport solve_drcwd(const DiReInstance& instance, const SolverConfig& config) {
  const auto start = Clock::now();
  SolveReport report;
  report.mode = SolveMode::kTwoStage;
  auto graph = build_diregraph(instance);
  const auto prep = preprocess(graph, config);
  if (prep.infeasible) {
    report.status = SolveStatus::kInfeasible;
    report.elapsed_seconds = seconds_since(start);
    return report;
  }

  const CommitteeScorer scorer(instance);
  const auto consider = [&](const Committee& committee) {
    if (!satisfies(instance, committee)) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "solver produced a committee that violates a constraint: " + committee.to_string());
    }
    ++report.committees_examined;
    const Score score = scorer(committee);
    if (better(score, committee, report)) {
      report.score = score;
      report.committee = committee;
    }
    if (report.committees.size() < config.max_committees) report.committees.push_back(committee);
  };

  bool complete = false;
  if (config.exhaustive) {
    const auto stats = for_each_feasible(graph, config, [&](const Committee& committee) {
      consider(committee);
      return true;
    });
    report.timed_out = stats.status == SearchStatus::kTimeout ||
                       stats.status == SearchStatus::kNodeLimit;
    complete = !report.timed_out;
  } else {
    const auto enumeration = enumerate_feasible(graph, config);
    for (const auto& committee : enumeration.committees) consider(committee);
    report.timed_out = enumeration.timed_out;
  }

  if (report.committee) {
    report.status = complete ? SolveStatus::kOptimal : SolveStatus::kFeasibleHeuristic;
    attach_utility(instance, report);
  } else {
    report.status = report.timed_out ? SolveStatus::kTimeout : SolveStatus::kInfeasible;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SolveReport mu1_fast_path(const DiReInstance& instance) {
  const auto start = Clock::now();
  if (instance.mu() != 1 || instance.pi() != 0 || instance.rule().kind != RuleKind::kKBorda) {
    throw Error(ErrorCode::kPreconditionViolated,
                "fast path needs one candidate attribute, no voter attributes and k-Borda");
  }
  SolveReport report;
  report.mode = SolveMode::kMu1Fast;
  report.committees_examined = 1;
  const auto& profile = instance.profile();
  const auto scores = candidate_scores(profile, instance.rule().scoring_for(instance.candidate_count()));
  const auto order = rank_by_score(profile, scores);
  const auto& attribute = instance.scheme().candidate_attributes.front();
  const auto& bounds = instance.diversity_bounds().front();

  const int required = std::accumulate(bounds.begin(), bounds.end(), 0);
  if (required > instance.k()) {
    report.status = SolveStatus::kInfeasible;
    report.elapsed_seconds = seconds_since(start);
    return report;
  }
  std::vector<char> taken(static_cast<std::size_t>(instance.candidate_count()), 0);
  std::vector<CandidateId> members;
  for (std::size_t g = 0; g < attribute.groups.size(); ++g) {
    std::vector<char> in_group(taken.size(), 0);
    for (int c : attribute.groups[g].members) in_group[static_cast<std::size_t>(c)] = 1;
    int need = bounds[g];
    for (CandidateId c : order) {
      if (need == 0) break;
      if (in_group[static_cast<std::size_t>(c)]) {
        members.push_back(c);
        taken[static_cast<std::size_t>(c)] = 1;
        --need;
      }
    }
  }
  for (CandidateId c : order) {
    if (static_cast<int>(members.size()) == instance.k()) break;
    if (!taken[static_cast<std::size_t>(c)]) {
      members.push_back(c);
      taken[static_cast<std::size_t>(c)] = 1;
    }
  }
  Committee committee(std::move(members));
  Score total = 0;
  for (CandidateId c : committee) total += scores[static_cast<std::size_t>(c)];
  report.status = SolveStatus::kOptimal;
  report.committee = committee;
  report.committees.push_back(committee);
  report.score = total;
  attach_utility(instance, report);
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SolveReport fpt_solve(const DiReInstance& instance, const SolverConfig& config) {
  const auto start = Clock::now();
  const auto found = fpt_rep_solver(instance, config);
  SolveReport report;
  report.mode = SolveMode::kFpt;
  report.timed_out = found.timed_out;
  const CommitteeScorer scorer(instance);
  for (const auto& committee : found.committees) {
    ++report.committees_examined;
    const Score score = scorer(committee);
    if (better(score, committee, report)) {
      report.score = score;
      report.committee = committee;
    }
  }
  report.committees = found.committees;
  if (report.committee) {
    report.status = SolveStatus::kFeasibleHeuristic;
    attach_utility(instance, report);
  } else {
    report.status = found.timed_out ? SolveStatus::kTimeout : SolveStatus::kInfeasible;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace dire
