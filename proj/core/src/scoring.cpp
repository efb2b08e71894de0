#include "dire/scoring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dire/combinatorics.hpp"

namespace dire {

ScoringVector::ScoringVector(std::vector<Score> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty scoring vector");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) throw Error(ErrorCode::kInvalidArgument, "negative scoring value");
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "scoring vector must be nonincreasing");
    }
  }
}

ScoringVector ScoringVector::borda(int m) {
  std::vector<Score> values(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) values[static_cast<std::size_t>(i)] = m - 1 - i;
  return ScoringVector(std::move(values));
}

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::kKBorda: return "kborda";
    case RuleKind::kBetaCC: return "cc";
    case RuleKind::kMonroe: return "monroe";
  }
  return "kborda";
}

std::optional<RuleKind> parse_rule_kind(std::string_view text) {
  if (text == "kborda" || text == "k-borda" || text == "borda") return RuleKind::kKBorda;
  if (text == "cc" || text == "beta-cc" || text == "betacc") return RuleKind::kBetaCC;
  if (text == "monroe") return RuleKind::kMonroe;
  return std::nullopt;
}

ScoringVector Rule::scoring_for(int m) const {
  if (!scoring) return ScoringVector::borda(m);
  if (scoring->size() != static_cast<std::size_t>(m)) {
    throw Error(ErrorCode::kInvalidArgument, "scoring vector length " +
                                                 std::to_string(scoring->size()) +
                                                 " does not match m = " + std::to_string(m));
  }
  return *scoring;
}

Score candidate_score(const PreferenceProfile& profile, const ScoringVector& scoring,
                      CandidateId candidate) {
  Score total = 0;
  for (VoterId v = 0; v < profile.voter_count(); ++v) {
    total += scoring.at(profile.position(v, candidate));
  }
  return total;
}

std::vector<Score> candidate_scores(const PreferenceProfile& profile,
                                    const ScoringVector& scoring) {
  std::vector<Score> scores(static_cast<std::size_t>(profile.candidate_count()), 0);
  for (const auto& ranking : profile.rankings()) {
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      scores[static_cast<std::size_t>(ranking[i])] += scoring.at(static_cast<int>(i) + 1);
    }
  }
  return scores;
}

std::vector<CandidateId> rank_by_score(const PreferenceProfile& profile,
                                       std::span<const Score> scores) {
  std::vector<CandidateId> order(static_cast<std::size_t>(profile.candidate_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](CandidateId a, CandidateId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return profile.priority_rank(a) < profile.priority_rank(b);
  });
  return order;
}

namespace {

Score cc_score(const PreferenceProfile& profile, const ScoringVector& scoring,
               std::span<const CandidateId> members) {
  if (members.empty()) return 0;
  Score total = 0;
  for (VoterId v = 0; v < profile.voter_count(); ++v) {
    int best = std::numeric_limits<int>::max();
    for (CandidateId c : members) best = std::min(best, profile.position(v, c));
    total += scoring.at(best);
  }
  return total;
}

std::vector<int> member_loads(int voters, std::size_t members) {
  const int k = static_cast<int>(members);
  std::vector<int> loads(members, voters / k);
  for (int i = 0; i < voters % k; ++i) ++loads[static_cast<std::size_t>(i)];
  return loads;
}

MonroeAssignment monroe_greedy(const PreferenceProfile& profile, const ScoringVector& scoring,
                               const Committee& committee) {
  const int n = profile.voter_count();
  const auto members = committee.members();
  MonroeAssignment result;
  result.representative.assign(static_cast<std::size_t>(n), -1);
  result.loads.assign(members.size(), 0);

  std::vector<std::size_t> member_order(members.size());
  std::iota(member_order.begin(), member_order.end(), 0);
  std::sort(member_order.begin(), member_order.end(), [&](std::size_t a, std::size_t b) {
    return profile.priority_rank(members[a]) < profile.priority_rank(members[b]);
  });
  const auto capacity = member_loads(n, members.size());

  std::vector<VoterId> voters(static_cast<std::size_t>(n));
  for (std::size_t slot = 0; slot < member_order.size(); ++slot) {
    const std::size_t mi = member_order[slot];
    const CandidateId member = members[mi];
    voters.clear();
    for (VoterId v = 0; v < n; ++v) {
      if (result.representative[static_cast<std::size_t>(v)] < 0) voters.push_back(v);
    }
    std::stable_sort(voters.begin(), voters.end(), [&](VoterId a, VoterId b) {
      return profile.position(a, member) < profile.position(b, member);
    });
    const auto take = std::min<std::size_t>(static_cast<std::size_t>(capacity[slot]), voters.size());
    for (std::size_t i = 0; i < take; ++i) {
      result.representative[static_cast<std::size_t>(voters[i])] = member;
      result.score += scoring.at(profile.position(voters[i], member));
    }
    result.loads[mi] = static_cast<int>(take);
  }
  return result;
}

// Rectangular Hungarian method (rows <= cols), minimising total cost.
// Returns the column assigned to each row.
std::vector<int> hungarian(const std::vector<std::vector<Score>>& cost) {
  const int rows = static_cast<int>(cost.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(cost[0].size());
  constexpr Score kInf = std::numeric_limits<Score>::max() / 4;
  std::vector<Score> u(static_cast<std::size_t>(rows) + 1, 0), v(static_cast<std::size_t>(cols) + 1, 0);
  std::vector<int> match(static_cast<std::size_t>(cols) + 1, 0), way(static_cast<std::size_t>(cols) + 1, 0);
  for (int i = 1; i <= rows; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<Score> minv(static_cast<std::size_t>(cols) + 1, kInf);
    std::vector<bool> used(static_cast<std::size_t>(cols) + 1, false);
    do {
      used[static_cast<std::size_t>(j0)] = true;
      const int i0 = match[static_cast<std::size_t>(j0)];
      Score delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= cols; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const Score cur = cost[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                          u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= cols; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (match[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> assignment(static_cast<std::size_t>(rows), -1);
  for (int j = 1; j <= cols; ++j) {
    if (match[static_cast<std::size_t>(j)] > 0) {
      assignment[static_cast<std::size_t>(match[static_cast<std::size_t>(j)] - 1)] = j - 1;
    }
  }
  return assignment;
}

MonroeAssignment monroe_exact(const PreferenceProfile& profile, const ScoringVector& scoring,
                              const Committee& committee) {
  const int n = profile.voter_count();
  const auto members = committee.members();
  const int k = static_cast<int>(members.size());
  const int floor_load = n / k;
  const bool has_extra = n % k != 0;

  // Slots: floor_load mandatory seats per member plus one optional seat when
  // k does not divide n. Mandatory seats carry a bonus larger than any
  // achievable score so every one of them is filled.
  struct Slot {
    std::size_t member;
    bool mandatory;
  };
  std::vector<Slot> slots;
  for (std::size_t mi = 0; mi < members.size(); ++mi) {
    for (int s = 0; s < floor_load; ++s) slots.push_back({mi, true});
    if (has_extra) slots.push_back({mi, false});
  }
  const Score bonus = (scoring.at(1) + 1) * static_cast<Score>(n) + 1;
  std::vector<std::vector<Score>> cost(static_cast<std::size_t>(n),
                                       std::vector<Score>(slots.size()));
  for (VoterId v = 0; v < n; ++v) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const Score gain = scoring.at(profile.position(v, members[slots[s].member]));
      cost[static_cast<std::size_t>(v)][s] = -(gain + (slots[s].mandatory ? bonus : 0));
    }
  }
  const auto assignment = hungarian(cost);

  MonroeAssignment result;
  result.representative.assign(static_cast<std::size_t>(n), -1);
  result.loads.assign(members.size(), 0);
  for (VoterId v = 0; v < n; ++v) {
    const auto& slot = slots[static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)])];
    const CandidateId member = members[slot.member];
    result.representative[static_cast<std::size_t>(v)] = member;
    ++result.loads[slot.member];
    result.score += scoring.at(profile.position(v, member));
  }
  return result;
}

Score score_with(const PreferenceProfile& profile, const Rule& rule, const ScoringVector& scoring,
                 const Committee& committee) {
  switch (rule.kind) {
    case RuleKind::kKBorda: {
      Score total = 0;
      for (CandidateId c : committee) total += candidate_score(profile, scoring, c);
      return total;
    }
    case RuleKind::kBetaCC:
      return cc_score(profile, scoring, committee.members());
    case RuleKind::kMonroe:
      if (committee.empty()) return 0;
      return monroe_greedy(profile, scoring, committee).score;
  }
  return 0;
}

WinnerResult greedy_winner(const PreferenceProfile& profile, const Rule& rule,
                           const ScoringVector& scoring, int k) {
  std::vector<CandidateId> chosen;
  std::vector<bool> taken(static_cast<std::size_t>(profile.candidate_count()), false);
  Score current = 0;
  for (int step = 0; step < k; ++step) {
    CandidateId best = -1;
    Score best_value = std::numeric_limits<Score>::min();
    for (CandidateId c : profile.priority()) {
      if (taken[static_cast<std::size_t>(c)]) continue;
      auto trial = chosen;
      trial.push_back(c);
      const Score value = score_with(profile, rule, scoring, Committee(std::move(trial)));
      if (value > best_value) {
        best_value = value;
        best = c;
      }
    }
    chosen.push_back(best);
    taken[static_cast<std::size_t>(best)] = true;
    current = best_value;
  }
  return {Committee(std::move(chosen)), current, false};
}

}  // namespace

Score score_committee(const PreferenceProfile& profile, const Rule& rule,
                      const Committee& committee, int k) {
  check_committee(committee, profile.candidate_count(), k);
  return score_with(profile, rule, rule.scoring_for(profile.candidate_count()), committee);
}

MonroeAssignment monroe_assign(const PreferenceProfile& profile, const Committee& committee,
                               MonroeMethod method, const std::optional<ScoringVector>& scoring) {
  check_committee(committee, profile.candidate_count());
  if (committee.empty()) throw Error(ErrorCode::kCommitteeSizeMismatch, "empty committee");
  const ScoringVector vector = scoring ? *scoring : ScoringVector::borda(profile.candidate_count());
  return method == MonroeMethod::kGreedy ? monroe_greedy(profile, vector, committee)
                                         : monroe_exact(profile, vector, committee);
}

WinnerResult unconstrained_winner(const PreferenceProfile& profile, const Rule& rule, int k,
                                  std::uint64_t exhaustive_cap) {
  const int m = profile.candidate_count();
  if (k < 1 || k > m) {
    throw Error(ErrorCode::kInvalidArgument, "committee size " + std::to_string(k) +
                                                 " outside [1, " + std::to_string(m) + "]");
  }
  const auto scoring = rule.scoring_for(m);
  if (rule.kind == RuleKind::kKBorda) {
    const auto scores = candidate_scores(profile, scoring);
    const auto order = rank_by_score(profile, scores);
    std::vector<CandidateId> top(order.begin(), order.begin() + k);
    Committee committee(std::move(top));
    Score total = 0;
    for (CandidateId c : committee) total += scores[static_cast<std::size_t>(c)];
    return {std::move(committee), total, true};
  }
  if (binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k)) > exhaustive_cap) {
    return greedy_winner(profile, rule, scoring, k);
  }
  std::vector<CandidateId> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  WinnerResult best{Committee{}, std::numeric_limits<Score>::min(), true};
  for_each_combination<CandidateId>(all, static_cast<std::size_t>(k),
                                    [&](std::span<const CandidateId> members) {
                                      Committee committee(
                                          std::vector<CandidateId>(members.begin(), members.end()));
                                      const Score value =
                                          score_with(profile, rule, scoring, committee);
                                      // Lexicographic enumeration: strict > keeps the least.
                                      if (value > best.score) {
                                        best.score = value;
                                        best.committee = std::move(committee);
                                      }
                                      return true;
                                    });
  return best;
}

Committee population_winning_committee(const PreferenceProfile& profile,
                                       std::span<const VoterId> population, const Rule& rule,
                                       int k, std::uint64_t exhaustive_cap) {
  if (population.empty()) throw Error(ErrorCode::kEmptyPopulation, "population has no voters");
  const auto sub = profile.restricted_to(population);
  return unconstrained_winner(sub, rule, k, exhaustive_cap).committee;
}

}  // namespace dire
