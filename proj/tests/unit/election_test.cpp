#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace dire;

TEST(ValidateProfile, SmallestValidProfile) {
  const std::vector<Ranking> rankings{{0, 1}};
  const std::vector<CandidateId> priority{0, 1};
  EXPECT_TRUE(validate_profile(2, rankings, priority).ok);
}

TEST(ValidateProfile, DuplicateCandidate) {
  const std::vector<Ranking> rankings{{0, 0}};
  const std::vector<CandidateId> priority{0, 1};
  const auto check = validate_profile(2, rankings, priority);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.code, ErrorCode::kDuplicateCandidate);
  EXPECT_EQ(check.voter, 0);
}

TEST(ValidateProfile, WrongLengthAndBadPriority) {
  const std::vector<Ranking> short_row{{0}};
  const std::vector<CandidateId> priority{0, 1};
  EXPECT_EQ(validate_profile(2, short_row, priority).code, ErrorCode::kWrongLengthRanking);
  const std::vector<Ranking> rankings{{0, 1}};
  const std::vector<CandidateId> bad{1, 1};
  EXPECT_FALSE(validate_profile(2, rankings, bad).ok);
  const std::vector<Ranking> out_of_range{{0, 2}};
  EXPECT_FALSE(validate_profile(2, out_of_range, priority).ok);
}

TEST(ValidateProfile, GoldenFixture) {
  const auto instance = dtest::example1();
  const auto& p = instance.profile();
  EXPECT_TRUE(validate_profile(4, std::vector<Ranking>(p.rankings().begin(), p.rankings().end()), p.priority()).ok);
}

TEST(PreferenceProfile, ConstructorThrows) {
  EXPECT_THROW(PreferenceProfile(2, {{0, 0}}), Error);
  EXPECT_THROW(PreferenceProfile(2, {{0, 1}}, {0}), Error);
}

TEST(Position, Examples) {
  const PreferenceProfile p(3, {{2, 0, 1}});
  EXPECT_EQ(p.position(0, 2), 1);
  EXPECT_EQ(p.position(0, 1), 3);
  const PreferenceProfile identity(5, {{0, 1, 2, 3, 4}});
  for (CandidateId c = 0; c < 5; ++c) EXPECT_EQ(identity.position(0, c), c + 1);
  EXPECT_THROW(p.position(1, 0), Error);
  EXPECT_THROW(p.position(0, 3), Error);
}

TEST(Position, SumInvariant) {
  const auto instance = dtest::random_instance(5, {});
  const auto& p = instance.profile();
  const int m = p.candidate_count();
  for (VoterId v = 0; v < p.voter_count(); ++v) {
    int sum = 0;
    for (CandidateId c = 0; c < m; ++c) sum += p.position(v, c);
    EXPECT_EQ(sum, m * (m + 1) / 2);
  }
}

TEST(BreakTie, Examples) {
  const std::vector<CandidateId> identity{0, 1, 2, 3};
  EXPECT_EQ(break_tie(std::vector<CandidateId>{1, 3}, identity), 1);
  EXPECT_EQ(break_tie(std::vector<CandidateId>{2}, identity), 2);
  EXPECT_EQ(break_tie(std::vector<CandidateId>{0, 1, 2}, std::vector<CandidateId>{2, 0, 1}), 2);
  EXPECT_THROW(break_tie(std::vector<CandidateId>{}, identity), Error);
}

TEST(PreferenceProfile, RestrictedKeepsPriority) {
  const PreferenceProfile p(3, {{0, 1, 2}, {2, 1, 0}, {1, 0, 2}}, {2, 1, 0});
  const std::vector<VoterId> voters{2, 0};
  const auto sub = p.restricted_to(voters);
  EXPECT_EQ(sub.voter_count(), 2);
  EXPECT_EQ(sub.ranking(0), (Ranking{1, 0, 2}));
  EXPECT_EQ(sub.priority_rank(2), 0);
}

TEST(Committee, CanonicalOrder) {
  const Committee a{3, 0};
  EXPECT_EQ(a.to_string(), "{0,3}");
  EXPECT_TRUE(a.contains(3));
  EXPECT_LT((Committee{0, 3}), (Committee{1, 2}));
  EXPECT_THROW((Committee{1, 1}), Error);
  EXPECT_THROW(check_committee(Committee{0, 4}, 4), Error);
  EXPECT_THROW(check_committee(Committee{0, 1}, 4, 3), Error);
}
