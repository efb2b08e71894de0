#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dire/election.hpp"

namespace dire {

/// Committees above this many candidates-choose-k fall back from exhaustive
/// to greedy winner determination.
inline constexpr std::uint64_t kDefaultOracleCap = 2'000'000;

/// Positional scores s_1 >= s_2 >= ... >= s_m >= 0.
class ScoringVector {
 public:
  /// Throws kInvalidArgument if the values increase or go negative.
  explicit ScoringVector(std::vector<Score> values);

  /// s_i = m - i.
  static ScoringVector borda(int m);

  /// Score for a 1-based position.
  Score at(int position) const { return values_[static_cast<std::size_t>(position - 1)]; }
  std::size_t size() const { return values_.size(); }
  std::span<const Score> values() const { return values_; }

  bool operator==(const ScoringVector&) const = default;

 private:
  std::vector<Score> values_;
};

enum class RuleKind { kKBorda, kBetaCC, kMonroe };

std::string_view to_string(RuleKind kind);
std::optional<RuleKind> parse_rule_kind(std::string_view text);

/// A committee selection rule. Without a custom vector the Borda vector for
/// the profile's candidate count is used.
struct Rule {
  RuleKind kind = RuleKind::kKBorda;
  std::optional<ScoringVector> scoring;

  ScoringVector scoring_for(int m) const;
  bool separable() const { return kind == RuleKind::kKBorda; }

  bool operator==(const Rule&) const = default;
};

Score candidate_score(const PreferenceProfile& profile, const ScoringVector& scoring,
                      CandidateId candidate);
std::vector<Score> candidate_scores(const PreferenceProfile& profile,
                                    const ScoringVector& scoring);

/// Candidates ordered by descending score, ties by priority.
std::vector<CandidateId> rank_by_score(const PreferenceProfile& profile,
                                       std::span<const Score> scores);

/// Committee value under `rule`. When k >= 0 the committee must have k
/// members (kCommitteeSizeMismatch otherwise).
Score score_committee(const PreferenceProfile& profile, const Rule& rule,
                      const Committee& committee, int k = -1);

enum class MonroeMethod { kGreedy, kExact };

struct MonroeAssignment {
  std::vector<CandidateId> representative;  // per voter
  std::vector<int> loads;                   // per committee member, in member order
  Score score = 0;
};

/// Balanced voter-to-member assignment; every member represents floor(n/k)
/// or ceil(n/k) voters.
///
/// kGreedy walks members in priority order; the first n mod k members claim
/// ceil(n/k) voters and the rest floor(n/k), each taking its most satisfied
/// unassigned voters (ties by voter index). kExact solves the capacitated
/// assignment optimally with the Hungarian method.
MonroeAssignment monroe_assign(const PreferenceProfile& profile, const Committee& committee,
                               MonroeMethod method = MonroeMethod::kGreedy,
                               const std::optional<ScoringVector>& scoring = std::nullopt);

struct WinnerResult {
  Committee committee;
  Score score = 0;
  bool exact = true;  // false when greedy selection was used
};

/// Rule winner over all candidates. k-Borda is exact top-k; beta-CC and
/// Monroe are exhaustive while C(m,k) <= cap and greedy marginal-gain
/// otherwise. Committee ties go to the lexicographically least committee.
WinnerResult unconstrained_winner(const PreferenceProfile& profile, const Rule& rule, int k,
                                  std::uint64_t exhaustive_cap = kDefaultOracleCap);

/// Winning committee of the sub-election restricted to `population`.
Committee population_winning_committee(const PreferenceProfile& profile,
                                       std::span<const VoterId> population, const Rule& rule,
                                       int k,
                                       std::uint64_t exhaustive_cap = kDefaultOracleCap);

}  // namespace dire
