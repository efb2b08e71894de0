#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace dire;

class RuleProperties : public ::testing::TestWithParam<RuleKind> {};

TEST_P(RuleProperties, ExhaustiveSolverMatchesOracle) {
  dtest::RandomShape shape;
  shape.rule = GetParam();
  SolverConfig config;
  config.exhaustive = true;
  config.max_committees = 100000;
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const auto instance = dtest::random_instance(seed, shape);
    const auto direct = dtest::best_direct(instance);
    const auto solved = solve_drcwd(instance, config);
    ASSERT_EQ(solved.committee.has_value(), direct.has_value()) << seed;
    if (direct) {
      ASSERT_EQ(*solved.score, direct->score) << seed;
      ASSERT_EQ(*solved.committee, direct->committee) << seed;
      ASSERT_LE(solved.utility_ratio->value(), 1.0);
    }
  }
}

TEST_P(RuleProperties, WinningCommitteesHaveSizeK) {
  dtest::RandomShape shape;
  shape.rule = GetParam();
  for (std::uint64_t seed = 1; seed < 60; ++seed) {
    const auto instance = dtest::random_instance(seed, shape);
    for (const auto& row : instance.winning_committees()) {
      for (const auto& w : row) ASSERT_EQ(static_cast<int>(w.size()), instance.k());
    }
  }
}

TEST_P(RuleProperties, ScoreIsMonotone) {
  dtest::RandomShape shape;
  shape.rule = GetParam();
  const Rule rule{GetParam(), std::nullopt};
  if (GetParam() == RuleKind::kMonroe) GTEST_SKIP() << "balanced assignment is not monotone in the committee";
  for (std::uint64_t seed = 1; seed < 40; ++seed) {
    const auto instance = dtest::random_instance(seed, shape);
    const int m = instance.candidate_count();
    for (const auto& w : dtest::all_committees(m, 2)) {
      for (CandidateId c = 0; c < m; ++c) {
        if (w.contains(c)) continue;
        std::vector<CandidateId> bigger(w.begin(), w.end());
        bigger.push_back(c);
        ASSERT_LE(score_committee(instance.profile(), rule, w),
                  score_committee(instance.profile(), rule, Committee(bigger)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllRules, RuleProperties,
                         ::testing::Values(RuleKind::kKBorda, RuleKind::kBetaCC, RuleKind::kMonroe),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Properties, KBordaIsSeparable) {
  for (std::uint64_t seed = 1; seed < 30; ++seed) {
    const auto instance = dtest::random_instance(seed, {});
    const auto& p = instance.profile();
    for (const auto& w : dtest::all_committees(p.candidate_count(), 3)) {
      Score sum = 0;
      for (CandidateId c : w) sum += dtest::borda_direct(p, c);
      ASSERT_EQ(score_committee(p, Rule{}, w), sum);
    }
  }
}

TEST(Properties, BetaCcSubmodular) {
  std::mt19937_64 gen(77);
  const Rule cc{RuleKind::kBetaCC, std::nullopt};
  for (std::uint64_t seed = 1; seed < 30; ++seed) {
    const auto instance = dtest::random_instance(seed, {});
    const auto& p = instance.profile();
    const int m = p.candidate_count();
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<CandidateId> order(static_cast<std::size_t>(m));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), gen);
      const int b = std::uniform_int_distribution<int>(1, m - 1)(gen);
      const int a = std::uniform_int_distribution<int>(1, b)(gen);
      const CandidateId c = order[static_cast<std::size_t>(b)];
      std::vector<CandidateId> as(order.begin(), order.begin() + a);
      std::vector<CandidateId> bs(order.begin(), order.begin() + b);
      const Score fa = score_committee(p, cc, Committee(as));
      const Score fb = score_committee(p, cc, Committee(bs));
      as.push_back(c);
      bs.push_back(c);
      ASSERT_GE(score_committee(p, cc, Committee(as)) - fa, score_committee(p, cc, Committee(bs)) - fb);
    }
  }
}

TEST(Properties, BordaMass) {
  for (std::uint64_t seed = 1; seed < 100; ++seed) {
    const auto instance = dtest::random_instance(seed, {});
    const auto& p = instance.profile();
    const Score m = p.candidate_count();
    Score total = 0;
    for (Score s : candidate_scores(p, ScoringVector::borda(p.candidate_count()))) total += s;
    ASSERT_EQ(total, p.voter_count() * m * (m - 1) / 2);
  }
}

TEST(Properties, PreprocessKeepsEveryFeasibleCommittee) {
  for (std::uint64_t seed = 1; seed < 150; ++seed) {
    const auto instance = dtest::random_instance(seed, {});
    auto graph = build_diregraph(instance);
    const auto report = preprocess(graph, SolverConfig{});
    const auto truth = dtest::feasible_direct(instance);
    if (report.infeasible) {
      ASSERT_TRUE(truth.empty()) << seed;
      continue;
    }
    for (const auto& w : truth) {
      for (const auto& n : graph.nodes) {
        int hits = 0;
        for (CandidateId c : n.domain) hits += w.contains(c) ? 1 : 0;
        ASSERT_GE(hits, n.bound) << "seed " << seed << " lost " << w.to_string();
      }
    }
  }
}

TEST(Properties, NecessaryConditionFlagImpliesInfeasible) {
  for (std::uint64_t seed = 1; seed < 200; ++seed) {
    const auto instance = dtest::random_instance(seed, {});
    if (necessary_condition_report(instance).any_flagged) {
      ASSERT_TRUE(dtest::feasible_direct(instance).empty()) << seed;
    }
  }
}
