#include "dire/election.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dire {

namespace {

ProfileCheck failure(ErrorCode code, std::string message, int voter, int candidate) {
  ProfileCheck check;
  check.ok = false;
  check.code = code;
  check.message = std::move(message);
  check.voter = voter;
  check.candidate = candidate;
  return check;
}

}  // namespace

ProfileCheck validate_profile(int candidate_count, std::span<const Ranking> rankings,
                              std::span<const CandidateId> priority) {
  if (candidate_count < 1) {
    return failure(ErrorCode::kInvalidArgument, "candidate count must be at least 1", -1, -1);
  }
  if (rankings.empty()) {
    return failure(ErrorCode::kInvalidArgument, "profile needs at least one voter", -1, -1);
  }
  const auto m = static_cast<std::size_t>(candidate_count);
  std::vector<int> seen(m, -1);
  for (std::size_t v = 0; v < rankings.size(); ++v) {
    const auto& ranking = rankings[v];
    const int voter = static_cast<int>(v);
    if (ranking.size() != m) {
      return failure(ErrorCode::kWrongLengthRanking,
                     "voter " + std::to_string(v) + " ranks " + std::to_string(ranking.size()) +
                         " candidates, expected " + std::to_string(m),
                     voter, -1);
    }
    for (CandidateId c : ranking) {
      if (c < 0 || static_cast<std::size_t>(c) >= m) {
        return failure(ErrorCode::kIndexOutOfRange,
                       "voter " + std::to_string(v) + " ranks unknown candidate " +
                           std::to_string(c),
                       voter, c);
      }
      if (seen[c] == voter) {
        return failure(ErrorCode::kDuplicateCandidate,
                       "voter " + std::to_string(v) + " ranks candidate " + std::to_string(c) +
                           " twice",
                       voter, c);
      }
      seen[c] = voter;
    }
  }
  if (priority.size() != m) {
    return failure(ErrorCode::kBadPriority,
                   "priority has " + std::to_string(priority.size()) + " entries, expected " +
                       std::to_string(m),
                   -1, -1);
  }
  std::vector<bool> in_priority(m, false);
  for (CandidateId c : priority) {
    if (c < 0 || static_cast<std::size_t>(c) >= m || in_priority[c]) {
      return failure(ErrorCode::kBadPriority,
                     "priority is not a permutation (entry " + std::to_string(c) + ")", -1, c);
    }
    in_priority[c] = true;
  }
  return {};
}

PreferenceProfile::PreferenceProfile(int candidate_count, std::vector<Ranking> rankings,
                                     std::vector<CandidateId> priority)
    : m_(candidate_count), rankings_(std::move(rankings)), priority_(std::move(priority)) {
  if (priority_.empty() && m_ > 0) {
    priority_.resize(static_cast<std::size_t>(m_));
    std::iota(priority_.begin(), priority_.end(), 0);
  }
  if (auto check = validate_profile(m_, rankings_, priority_); !check) {
    throw Error(check.code, check.message);
  }
  const auto m = static_cast<std::size_t>(m_);
  positions_.resize(rankings_.size() * m);
  for (std::size_t v = 0; v < rankings_.size(); ++v) {
    for (std::size_t i = 0; i < m; ++i) {
      positions_[v * m + static_cast<std::size_t>(rankings_[v][i])] = static_cast<int>(i) + 1;
    }
  }
  priority_rank_.resize(m);
  for (std::size_t i = 0; i < m; ++i) priority_rank_[priority_[i]] = static_cast<int>(i);
}

const Ranking& PreferenceProfile::ranking(VoterId voter) const {
  if (voter < 0 || voter >= voter_count()) {
    throw Error(ErrorCode::kIndexOutOfRange, "voter " + std::to_string(voter));
  }
  return rankings_[static_cast<std::size_t>(voter)];
}

int PreferenceProfile::position(VoterId voter, CandidateId candidate) const {
  if (voter < 0 || voter >= voter_count() || candidate < 0 || candidate >= m_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "position(" + std::to_string(voter) + ", " + std::to_string(candidate) + ")");
  }
  return positions_[static_cast<std::size_t>(voter) * static_cast<std::size_t>(m_) +
                    static_cast<std::size_t>(candidate)];
}

int PreferenceProfile::priority_rank(CandidateId candidate) const {
  if (candidate < 0 || candidate >= m_) {
    throw Error(ErrorCode::kIndexOutOfRange, "candidate " + std::to_string(candidate));
  }
  return priority_rank_[static_cast<std::size_t>(candidate)];
}

PreferenceProfile PreferenceProfile::restricted_to(std::span<const VoterId> voters) const {
  if (voters.empty()) throw Error(ErrorCode::kEmptyPopulation, "no voters selected");
  std::vector<Ranking> subset;
  subset.reserve(voters.size());
  for (VoterId v : voters) subset.push_back(ranking(v));
  return PreferenceProfile(m_, std::move(subset), priority_);
}

CandidateId break_tie(std::span<const CandidateId> candidates,
                      std::span<const CandidateId> priority) {
  if (candidates.empty()) throw Error(ErrorCode::kEmptySet, "break_tie on an empty set");
  for (CandidateId c : priority) {
    if (std::find(candidates.begin(), candidates.end(), c) != candidates.end()) return c;
  }
  throw Error(ErrorCode::kBadPriority, "no candidate of the set appears in the priority order");
}

Committee::Committee(std::vector<CandidateId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorCode::kDuplicateCandidate, "committee repeats a candidate");
  }
}

bool Committee::contains(CandidateId candidate) const {
  return std::binary_search(members_.begin(), members_.end(), candidate);
}

std::string Committee::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

void check_committee(const Committee& committee, int candidate_count, int k) {
  for (CandidateId c : committee) {
    if (c < 0 || c >= candidate_count) {
      throw Error(ErrorCode::kIndexOutOfRange, "committee member " + std::to_string(c));
    }
  }
  if (k >= 0 && committee.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kCommitteeSizeMismatch,
                "committee has " + std::to_string(committee.size()) + " members, expected " +
                    std::to_string(k));
  }
}

}  // namespace dire
