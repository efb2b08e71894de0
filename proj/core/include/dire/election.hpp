#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dire/error.hpp"

namespace dire {

using CandidateId = std::int32_t;
using VoterId = std::int32_t;
using Score = std::int64_t;
using Ranking = std::vector<CandidateId>;

/// Outcome of profile validation. On failure `voter`/`candidate` locate the
/// first violated invariant (-1 when not applicable).
struct ProfileCheck {
  bool ok = true;
  ErrorCode code = ErrorCode::kInvalidArgument;
  std::string message;
  int voter = -1;
  int candidate = -1;

  explicit operator bool() const { return ok; }
};

ProfileCheck validate_profile(int candidate_count, std::span<const Ranking> rankings,
                              std::span<const CandidateId> priority);

/// Complete strict rankings of m candidates by n voters plus the priority
/// order used for deterministic tie-breaking. Immutable once built.
class PreferenceProfile {
 public:
  /// Throws dire::Error when any invariant fails. An empty priority means
  /// ascending candidate id.
  PreferenceProfile(int candidate_count, std::vector<Ranking> rankings,
                    std::vector<CandidateId> priority = {});

  int candidate_count() const { return m_; }
  int voter_count() const { return static_cast<int>(rankings_.size()); }

  const Ranking& ranking(VoterId voter) const;
  std::span<const Ranking> rankings() const { return rankings_; }
  std::span<const CandidateId> priority() const { return priority_; }

  /// 1-based position of `candidate` in `voter`'s ranking.
  int position(VoterId voter, CandidateId candidate) const;

  /// Index of `candidate` in the priority order (0 = wins every tie).
  int priority_rank(CandidateId candidate) const;

  /// Sub-election over the given voters, same candidates and priority.
  PreferenceProfile restricted_to(std::span<const VoterId> voters) const;

  bool operator==(const PreferenceProfile& other) const {
    return m_ == other.m_ && rankings_ == other.rankings_ && priority_ == other.priority_;
  }

 private:
  int m_;
  std::vector<Ranking> rankings_;
  std::vector<CandidateId> priority_;
  std::vector<int> positions_;  // voter-major, 1-based
  std::vector<int> priority_rank_;
};

/// Member of `candidates` that appears earliest in `priority`.
CandidateId break_tie(std::span<const CandidateId> candidates,
                      std::span<const CandidateId> priority);

/// A set of distinct candidates kept sorted ascending, so equality and the
/// lexicographic committee order are canonical.
class Committee {
 public:
  Committee() = default;
  /// Throws kDuplicateCandidate on repeated ids.
  explicit Committee(std::vector<CandidateId> members);
  Committee(std::initializer_list<CandidateId> members)
      : Committee(std::vector<CandidateId>(members)) {}

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const CandidateId> members() const { return members_; }
  bool contains(CandidateId candidate) const;

  std::vector<CandidateId>::const_iterator begin() const { return members_.begin(); }
  std::vector<CandidateId>::const_iterator end() const { return members_.end(); }

  /// "{0,3}".
  std::string to_string() const;

  auto operator<=>(const Committee&) const = default;
  bool operator==(const Committee&) const = default;

 private:
  std::vector<CandidateId> members_;
};

/// Throws kIndexOutOfRange / kCommitteeSizeMismatch unless every member is
/// below `candidate_count` and (when k >= 0) the committee has k members.
void check_committee(const Committee& committee, int candidate_count, int k = -1);

}  // namespace dire
