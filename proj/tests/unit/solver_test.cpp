#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace dire;

namespace {

SolverConfig exhaustive() {
  SolverConfig config;
  config.exhaustive = true;
  config.max_committees = 100000;
  return config;
}

ConstraintNode node(std::vector<CandidateId> domain, int bound) {
  ConstraintNode n;
  n.domain = std::move(domain);
  n.bound = bound;
  return n;
}

}  // namespace

TEST(DiReGraph, GoldenFixture) {
  const auto graph = build_diregraph(dtest::example1());
  ASSERT_EQ(graph.nodes.size(), 4U);
  const std::vector<std::vector<CandidateId>> domains{{0, 1}, {2, 3}, {0, 1}, {1, 3}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(graph.nodes[i].domain, domains[i]);
    EXPECT_EQ(graph.nodes[i].bound, 1);
  }
  EXPECT_EQ(graph.out_degree(1), 3);
  EXPECT_EQ(graph.out_degree(0), 2);
  EXPECT_EQ(graph.out_degree(2), 1);
}

TEST(DiReGraph, EmptyConstraintLevel) {
  const auto e = dtest::example1();
  const DiReInstance bare(e.profile(), {}, 2, Rule{}, {}, {});
  const auto graph = build_diregraph(bare);
  EXPECT_TRUE(graph.nodes.empty());
  EXPECT_EQ(components(graph).size(), 4U);
}

TEST(Components, FixtureIsConnected) {
  const auto parts = components(build_diregraph(dtest::example1()));
  ASSERT_EQ(parts.size(), 1U);
  EXPECT_EQ(parts[0].candidates.size() + parts[0].nodes.size(), 8U);
}

TEST(Components, DisjointHalves) {
  const PreferenceProfile p(4, {{0, 1, 2, 3}});
  AttributeScheme scheme;
  scheme.candidate_attributes = {{"a", {{"x", {0, 1}}}, true}, {"b", {{"y", {2, 3}}}, true}};
  const DiReInstance instance(p, scheme, 2, Rule{}, {{1}, {1}}, {});
  EXPECT_EQ(components(build_diregraph(instance)).size(), 2U);
}

TEST(PairwiseFeasible, Formula) {
  EXPECT_TRUE(pairwise_feasible(node({0, 1}, 1), node({2, 3}, 1), 2));
  EXPECT_FALSE(pairwise_feasible(node({0, 1}, 2), node({1, 2}, 2), 2));
  EXPECT_TRUE(pairwise_feasible(node({0}, 1), node({1}, 1), 2));
}

TEST(DomainReduce, FixtureUnchanged) {
  auto graph = build_diregraph(dtest::example1());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) EXPECT_FALSE(domain_reduce(graph, i, j, 100000).changed);
    }
  }
}

TEST(DomainReduce, EmptiesWhenSeatsRunOut) {
  DiReGraph graph;
  graph.k = 2;
  graph.candidate_count = 3;
  graph.nodes = {node({0, 1}, 2), node({2}, 1)};
  graph.candidate_score = {0, 0, 0};
  graph.priority_rank = {0, 1, 2};
  graph.rebuild_edges();
  const auto result = domain_reduce(graph, 0, 1, 100000);
  EXPECT_TRUE(result.emptied);
  EXPECT_TRUE(graph.nodes[0].domain.empty());
}

TEST(DomainReduce, UnitBoundSpecialisation) {
  DiReGraph graph;
  graph.k = 2;
  graph.candidate_count = 5;
  // d in D_i survives iff d plus some 2-subset of D_j fits in 2 seats, i.e. d is in D_j.
  graph.nodes = {node({0, 1, 4}, 1), node({1, 2, 4}, 2)};
  graph.candidate_score.assign(5, 0);
  graph.priority_rank = {0, 1, 2, 3, 4};
  graph.rebuild_edges();
  const auto result = domain_reduce(graph, 0, 1, 100000);
  EXPECT_EQ(result.removed, (std::vector<CandidateId>{0}));
  EXPECT_EQ(graph.nodes[0].domain, (std::vector<CandidateId>{1, 4}));
}

TEST(Preprocess, ProvablyInfeasible) {
  auto graph = build_diregraph(dtest::load("infeasible.json"));
  const auto report = preprocess(graph, SolverConfig{});
  EXPECT_TRUE(report.infeasible);
  EXPECT_FALSE(report.reason.empty());
}

TEST(HeuristicBacktrack, GoldenFixture) {
  const auto instance = dtest::example1();
  auto graph = build_diregraph(instance);
  ASSERT_FALSE(preprocess(graph, SolverConfig{}).infeasible);
  const auto first = heuristic_backtrack(graph, SolverConfig{});
  ASSERT_TRUE(first.committee);
  const std::set<Committee> allowed{{0, 3}, {1, 2}, {1, 3}};
  EXPECT_TRUE(allowed.count(*first.committee));
  EXPECT_TRUE(first.committee->contains(1));  // c2 is tried first at the root
}

TEST(EnumerateFeasible, ExhaustiveGolden) {
  auto graph = build_diregraph(dtest::example1());
  preprocess(graph, exhaustive());
  auto listed = enumerate_feasible(graph, exhaustive()).committees;
  std::sort(listed.begin(), listed.end());
  EXPECT_EQ(listed, (std::vector<Committee>{{0, 3}, {1, 2}, {1, 3}}));
}

TEST(EnumerateFeasible, SingletonMatchesFirstCommittee) {
  auto graph = build_diregraph(dtest::example1());
  preprocess(graph, SolverConfig{});
  SolverConfig one;
  one.max_committees = 1;
  const auto listed = enumerate_feasible(graph, one);
  ASSERT_EQ(listed.committees.size(), 1U);
  EXPECT_TRUE(listed.truncated);
  EXPECT_EQ(listed.committees.front(), *heuristic_backtrack(graph, one).committee);
}

TEST(EnumerateFeasible, InfeasibleIsEmpty) {
  auto graph = build_diregraph(dtest::load("infeasible.json"));
  SolverConfig config;
  config.reduce_domains = false;
  EXPECT_TRUE(enumerate_feasible(graph, config).committees.empty());
  EXPECT_TRUE(enumerate_feasible(graph, exhaustive()).committees.empty());
}

TEST(EnumerateFeasible, ShiftLeftHarvestsDistinctCommittees) {
  auto graph = build_diregraph(dtest::example1());
  preprocess(graph, SolverConfig{});
  const auto listed = enumerate_feasible(graph, SolverConfig{});
  const std::set<Committee> unique(listed.committees.begin(), listed.committees.end());
  EXPECT_EQ(unique.size(), listed.committees.size());
  EXPECT_GE(listed.committees.size(), 2U);
  EXPECT_EQ(listed.restarts, 2U);
}

TEST(ForEachFeasible, VisitsEachFeasibleCommitteeOnce) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto instance = dtest::random_instance(seed, {});
    auto graph = build_diregraph(instance);
    const auto truth = dtest::feasible_direct(instance);
    std::vector<Committee> seen;
    if (!preprocess(graph, exhaustive()).infeasible) {
      for_each_feasible(graph, exhaustive(), [&](const Committee& c) {
        seen.push_back(c);
        return true;
      });
    }
    std::sort(seen.begin(), seen.end());
    ASSERT_EQ(seen, truth) << "seed " << seed;
  }
}

TEST(ForEachFeasible, NodeLimitStops) {
  const auto instance = dtest::random_instance(8, {});
  const auto graph = build_diregraph(instance);
  SolverConfig config = exhaustive();
  config.node_limit = 1;
  const auto stats = for_each_feasible(graph, config, [](const Committee&) { return true; });
  EXPECT_TRUE(stats.status == SearchStatus::kNodeLimit || stats.status == SearchStatus::kComplete);
}

TEST(HeuristicBacktrack, SeedOnlyReordersTies) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto instance = dtest::random_instance(seed, {});
    auto graph = build_diregraph(instance);
    if (preprocess(graph, SolverConfig{}).infeasible) continue;
    SolverConfig a;
    a.seed = 4;
    const auto first = heuristic_backtrack(graph, a);
    const auto again = heuristic_backtrack(graph, a);
    EXPECT_EQ(first.committee, again.committee);
    if (first.committee) EXPECT_TRUE(dtest::satisfies_direct(instance, *first.committee));
  }
}
