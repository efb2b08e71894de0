// Acceptance runner: one [PASS]/[FAIL] line per criterion, nonzero exit if
// any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace dire;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& out;
  void expect(bool condition, const std::string& what) {
    if (!condition && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

constexpr std::array<RuleKind, 3> kRules{RuleKind::kKBorda, RuleKind::kBetaCC, RuleKind::kMonroe};

std::vector<DiReInstance> oracle_suite() {
  std::vector<DiReInstance> suite;
  for (RuleKind rule : kRules) {
    dtest::RandomShape shape;
    shape.rule = rule;
    for (std::uint64_t seed = 1; seed <= 80; ++seed) suite.push_back(dtest::random_instance(seed, shape));
  }
  return suite;
}

const std::vector<DiReInstance>& suite() {
  static const auto instances = oracle_suite();
  return instances;
}

SolverConfig exhaustive_config() {
  SolverConfig config;
  config.exhaustive = true;
  config.max_committees = 100000;
  return config;
}

// AC1
Outcome golden_fixture() {
  Outcome out;
  Check check{out};
  const auto start = std::chrono::steady_clock::now();
  const auto instance = dtest::example1();
  const auto& profile = instance.profile();

  const auto unconstrained = unconstrained_winner(profile, instance.rule(), 2);
  check.expect(unconstrained.score == 17, "unconstrained score " + std::to_string(unconstrained.score));
  check.expect(unconstrained.committee == Committee{0, 1}, "unconstrained committee");

  const auto diverse = brute_force_oracle(dtest::example1_diversity_only());
  check.expect(diverse.score == 13, "diverse-only score");

  check.expect(instance.winning_committees()[0][0] == Committee{0, 1}, "W_CA");
  check.expect(instance.winning_committees()[0][1] == Committee{1, 3}, "W_IL");

  const auto report = solve_drcwd(instance, exhaustive_config());
  check.expect(report.status == SolveStatus::kOptimal && report.score == 12, "DiRe score");
  check.expect(report.committee && satisfies(instance, *report.committee).ok &&
                   satisfies(instance, *report.committee).violations.empty() &&
                   dtest::satisfies_direct(instance, *report.committee),
               "DiRe committee violates a constraint");
  check.expect(satisfies(instance, Committee{1, 2}).ok, "{c2,c3} should satisfy all four constraints");
  check.expect(instance.constraints().size() == 4, "four constraints");

  auto graph = build_diregraph(instance);
  preprocess(graph, exhaustive_config());
  auto listed = enumerate_feasible(graph, exhaustive_config()).committees;
  std::sort(listed.begin(), listed.end());
  const std::vector<Committee> expected{{0, 3}, {1, 2}, {1, 3}};
  check.expect(listed == expected, "exhaustive feasible set");
  check.expect(dtest::feasible_direct(instance) == expected, "brute-force feasible set");

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(seconds < 1.0, "runtime " + std::to_string(seconds) + " s");
  if (out.pass) out.detail = "17 / 13 / 12, feasible set {c1,c4},{c2,c3},{c2,c4}";
  return out;
}

// AC2
Outcome oracle_equivalence() {
  Outcome out;
  Check check{out};
  const auto start = std::chrono::steady_clock::now();
  int feasible = 0;
  int infeasible = 0;
  for (const auto& instance : suite()) {
    const auto oracle = brute_force_oracle(instance);
    const auto solved = solve_drcwd(instance, exhaustive_config());
    const auto direct = dtest::best_direct(instance);
    const std::string tag = std::string(to_string(instance.rule().kind)) + " m=" +
                            std::to_string(instance.candidate_count()) + " k=" + std::to_string(instance.k());
    check.expect(oracle.status == solved.status, "status mismatch on " + tag);
    check.expect(oracle.score == solved.score, "score mismatch on " + tag);
    check.expect(oracle.committee == solved.committee, "committee tie-break mismatch on " + tag);
    check.expect(direct.has_value() == (oracle.status == SolveStatus::kOptimal), "direct oracle status on " + tag);
    if (direct) {
      check.expect(oracle.score == direct->score, "direct oracle score on " + tag);
      ++feasible;
    } else {
      ++infeasible;
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(seconds < 120.0, "runtime " + std::to_string(seconds) + " s");
  if (out.pass) {
    out.detail = std::to_string(suite().size()) + " instances (" + std::to_string(feasible) + " feasible, " +
                 std::to_string(infeasible) + " infeasible), " + std::to_string(seconds).substr(0, 5) + " s";
  }
  return out;
}

// AC3
Outcome soundness() {
  Outcome out;
  Check check{out};
  std::size_t returned = 0;
  const auto verify = [&](const DiReInstance& instance, const Committee& committee, const char* who) {
    ++returned;
    check.expect(static_cast<int>(committee.size()) == instance.k(), std::string(who) + " returned wrong size");
    check.expect(dtest::satisfies_direct(instance, committee), std::string(who) + " returned " + committee.to_string());
  };
  const auto verify_report = [&](const DiReInstance& instance, const SolveReport& report, const char* who) {
    if (report.committee) verify(instance, *report.committee, who);
    for (const auto& committee : report.committees) verify(instance, committee, who);
  };

  SolverConfig heuristic;
  heuristic.max_committees = 50;
  for (const auto& instance : suite()) {
    verify_report(instance, brute_force_oracle(instance), "oracle");
    verify_report(instance, solve_drcwd(instance, exhaustive_config()), "exhaustive");
    verify_report(instance, solve_drcwd(instance, heuristic), "two-stage");
    SolverConfig seeded = heuristic;
    seeded.seed = 99;
    verify_report(instance, solve_drcwd(instance, seeded), "seeded two-stage");
    auto graph = build_diregraph(instance);
    if (!preprocess(graph, heuristic).infeasible) {
      if (const auto first = heuristic_backtrack(graph, heuristic); first.committee) {
        verify(instance, *first.committee, "heuristic_backtrack");
      }
    }
    if (instance.mu() == 1 && instance.pi() == 0 && instance.rule().kind == RuleKind::kKBorda) {
      verify_report(instance, mu1_fast_path(instance), "mu1");
    }
  }
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto instance = dtest::random_rep_instance(seed);
    verify_report(instance, fpt_solve(instance, heuristic), "fpt");
  }
  if (out.pass) out.detail = std::to_string(returned) + " committees checked, 0 violations";
  return out;
}

// AC4
Outcome pruning_soundness() {
  Outcome out;
  Check check{out};
  std::size_t prunes = 0;
  std::size_t emptied = 0;
  std::size_t removed = 0;
  SolverConfig plain = exhaustive_config();
  plain.reduce_domains = false;
  for (const auto& instance : suite()) {
    const auto feasible = dtest::feasible_direct(instance);
    const bool oracle_ok = !feasible.empty();
    std::set<CandidateId> used;
    for (const auto& committee : feasible) used.insert(committee.begin(), committee.end());

    const auto graph = build_diregraph(instance);
    const int count = static_cast<int>(graph.nodes.size());
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < count; ++j) {
        if (i == j) continue;
        if (!pairwise_feasible(graph.nodes[static_cast<std::size_t>(i)], graph.nodes[static_cast<std::size_t>(j)],
                               graph.k)) {
          ++prunes;
          check.expect(!oracle_ok, "pairwise test pruned a feasible instance");
        }
        auto copy = graph;
        const auto result = domain_reduce(copy, i, j, 100000);
        if (result.emptied) {
          ++emptied;
          check.expect(!oracle_ok, "domain_reduce emptied a domain of a feasible instance");
        }
        for (CandidateId d : result.removed) {
          ++removed;
          check.expect(!used.count(d), "domain_reduce removed a value used by a feasible committee");
        }
      }
    }
    auto reduced = graph;
    const bool pruned = preprocess(reduced, exhaustive_config()).infeasible;
    if (pruned) check.expect(!oracle_ok, "preprocess rejected a feasible instance");
    std::size_t with_reduction = 0;
    if (!pruned) {
      for_each_feasible(reduced, exhaustive_config(), [&](const Committee&) {
        ++with_reduction;
        return true;
      });
    }
    auto unreduced = graph;
    std::size_t without_reduction = 0;
    if (!preprocess(unreduced, plain).infeasible) {
      for_each_feasible(unreduced, plain, [&](const Committee&) {
        ++without_reduction;
        return true;
      });
    }
    check.expect((with_reduction > 0) == oracle_ok, "verdict after domain reduction");
    check.expect(with_reduction == feasible.size() && without_reduction == feasible.size(),
                 "feasible count changed by domain reduction");
  }
  if (out.pass) {
    out.detail = std::to_string(prunes) + " pair prunes, " + std::to_string(emptied) + " emptied domains, " +
                 std::to_string(removed) + " removed values, all confirmed by brute force";
  }
  return out;
}

// AC5
Outcome cc_properties() {
  Outcome out;
  Check check{out};
  std::mt19937_64 gen(2024);
  const Rule cc{RuleKind::kBetaCC, std::nullopt};
  int triples = 0;
  int profiles = 0;
  const auto mass_ok = [&](const PreferenceProfile& profile) {
    ++profiles;
    const auto m = static_cast<Score>(profile.candidate_count());
    const auto scores = candidate_scores(profile, ScoringVector::borda(profile.candidate_count()));
    Score total = 0;
    for (Score s : scores) total += s;
    return total == profile.voter_count() * m * (m - 1) / 2;
  };
  while (triples < 1000) {
    const int m = std::uniform_int_distribution<int>(3, 10)(gen);
    const int n = std::uniform_int_distribution<int>(1, 8)(gen);
    std::vector<Ranking> rankings;
    for (int v = 0; v < n; ++v) {
      Ranking r(static_cast<std::size_t>(m));
      std::iota(r.begin(), r.end(), 0);
      std::shuffle(r.begin(), r.end(), gen);
      rankings.push_back(r);
    }
    const PreferenceProfile profile(m, rankings);
    check.expect(mass_ok(profile), "Borda mass");
    for (int t = 0; t < 10; ++t, ++triples) {
      std::vector<CandidateId> order(static_cast<std::size_t>(m));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), gen);
      const int b = std::uniform_int_distribution<int>(1, m - 1)(gen);
      const int a = std::uniform_int_distribution<int>(1, b)(gen);
      const CandidateId c = order[static_cast<std::size_t>(b)];
      std::vector<CandidateId> bset(order.begin(), order.begin() + b);
      std::vector<CandidateId> aset(order.begin(), order.begin() + a);
      auto ac = aset;
      ac.push_back(c);
      auto bc = bset;
      bc.push_back(c);
      const Score fa = score_committee(profile, cc, Committee(aset));
      const Score fb = score_committee(profile, cc, Committee(bset));
      const Score fac = score_committee(profile, cc, Committee(ac));
      const Score fbc = score_committee(profile, cc, Committee(bc));
      check.expect(fa <= fb, "monotonicity counterexample");
      check.expect(fac - fa >= fbc - fb, "submodularity counterexample");
    }
  }
  for (const auto& instance : suite()) check.expect(mass_ok(instance.profile()), "Borda mass on oracle suite");
  if (out.pass) {
    out.detail = std::to_string(triples) + " triples, " + std::to_string(profiles) + " profiles, 0 counterexamples";
  }
  return out;
}

// AC6
Outcome fpt_agreement() {
  Outcome out;
  Check check{out};
  int feasible = 0;
  int total = 0;
  SolverConfig config;
  config.max_committees = 1000;
  for (RuleKind rule : kRules) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed, ++total) {
      const auto instance = dtest::random_rep_instance(seed, rule);
      const bool oracle_ok = !dtest::feasible_direct(instance).empty();
      const auto pruned = fpt_rep_solver(instance, config, true);
      const auto full = fpt_rep_solver(instance, config, false);
      check.expect(!pruned.committees.empty() == oracle_ok, "fpt verdict differs from oracle");
      check.expect(!full.committees.empty() == oracle_ok, "fpt verdict without pruning differs from oracle");
      feasible += oracle_ok ? 1 : 0;
    }
  }
  if (out.pass) {
    out.detail = std::to_string(total) + " instances (" + std::to_string(feasible) +
                 " feasible), pruning preserved every verdict";
  }
  return out;
}

// True iff the exhaustive search finds at least one committee.
bool search_feasible(const DiReInstance& instance) {
  auto graph = build_diregraph(instance);
  SolverConfig config = exhaustive_config();
  if (preprocess(graph, config).infeasible) return false;
  bool found = false;
  const auto stats = for_each_feasible(graph, config, [&](const Committee& committee) {
    found = dtest::satisfies_direct(instance, committee);
    return false;
  });
  if (stats.status == SearchStatus::kTimeout) throw Error(ErrorCode::kInvalidArgument, "search timed out");
  return found;
}

// AC7
Outcome reductions() {
  Outcome out;
  Check check{out};
  int cases = 0;
  SolverConfig fpt_config;
  fpt_config.max_committees = 1;
  for (const auto& [name, graph] : dtest::graph_suite()) {
    const int vc = dtest::min_vertex_cover(graph);
    for (int k = 1; k <= graph.vertex_count; ++k) {
      const bool expect = vc <= k;
      const auto cc = reduce_vc_cc(graph, k);
      const auto best = brute_force_oracle(cc.instance);
      check.expect((best.score == cc.map.target_score) == expect, "vc-cc on " + name + " k=" + std::to_string(k));
      ++cases;
      if (k < 2) continue;
      const auto rep = reduce_vc_representation(graph, k, 1);
      const bool by_search = search_feasible(rep.instance);
      const auto fpt = fpt_rep_solver(rep.instance, fpt_config);
      check.expect(by_search == expect, "vc-representation search on " + name + " k=" + std::to_string(k));
      check.expect(!fpt.committees.empty() == expect, "vc-representation fpt on " + name + " k=" + std::to_string(k));
      if (!fpt.committees.empty()) {
        const auto cover = cover_from_committee(rep.map, fpt.committees.front());
        std::set<int> in(cover.begin(), cover.end());
        bool covers = static_cast<int>(in.size()) <= k;
        for (const auto& [u, v] : graph.edges) covers = covers && (in.count(u) || in.count(v));
        check.expect(covers, "committee does not map to a cover on " + name);
      }
      ++cases;
    }
  }
  for (const auto& [name, graph] : dtest::cubic_suite()) {
    const int vc = dtest::min_vertex_cover(graph);
    for (int k = 1; k <= graph.vertex_count; ++k) {
      const auto div = reduce_vc_diversity(graph, k, 3, 11);
      const bool feasible = !dtest::feasible_direct(div.instance).empty();
      check.expect(feasible == (vc <= k), "vc-diversity on " + name + " k=" + std::to_string(k));
      check.expect(search_feasible(div.instance) == feasible, "vc-diversity search on " + name);
      ++cases;
    }
  }
  if (out.pass) out.detail = std::to_string(cases) + " (graph, k, construction) cases agree with exhaustive VC";
  return out;
}

// AC8
Outcome mallows() {
  Outcome out;
  Check check{out};
  const auto start = std::chrono::steady_clock::now();
  const Ranking sigma{0, 1, 2};
  const auto profile = sample_mallows(MallowsParams{1.0, sigma, 8}, 60000);
  std::map<Ranking, int> counts;
  for (const auto& r : profile.rankings()) ++counts[r];
  check.expect(counts.size() == 6, "not all six rankings observed");
  double worst = 0.0;
  for (const auto& [ranking, count] : counts) {
    worst = std::max(worst, std::abs(count / 60000.0 - 1.0 / 6.0));
  }
  check.expect(worst <= 0.02, "frequency deviation " + std::to_string(worst));

  std::vector<double> means;
  for (double phi : {1.0, 0.5, 0.1}) {
    const auto sample = sample_mallows(MallowsParams{phi, sigma, 21}, 60000);
    double total = 0.0;
    for (const auto& r : sample.rankings()) total += static_cast<double>(kendall_tau(r, sigma));
    means.push_back(total / 60000.0);
  }
  check.expect(means[0] > means[1] && means[1] > means[2], "Kendall means not strictly decreasing");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(seconds < 30.0, "runtime " + std::to_string(seconds) + " s");
  if (out.pass) {
    char text[160];
    std::snprintf(text, sizeof text, "max |freq - 1/6| = %.4f; mean Kendall %.3f > %.3f > %.3f", worst, means[0],
                  means[1], means[2]);
    out.detail = text;
  }
  return out;
}

// AC9
Outcome trends() {
  Outcome out;
  Check check{out};
  ExperimentConfig config;
  config.dataset = DatasetKind::kSyn1;
  for (std::uint64_t s = 1; s <= 20; ++s) config.seeds.push_back(s);
  config.rules = {RuleKind::kKBorda};
  config.mus = {0, 1, 2};
  config.pis = {0, 1, 2};
  config.m = 10;
  config.n = 12;
  config.k = 3;
  config.solver = SolverChoice::kOracle;
  const auto rows = run_experiment(config);
  check.expect(rows.size() == 180, "expected 180 rows");
  std::array<int, 5> total{};
  std::array<int, 5> feasible{};
  std::array<double, 5> utility{};
  for (const auto& row : rows) {
    const int level = row.mu + row.pi;
    ++total[static_cast<std::size_t>(level)];
    if (row.status == "optimal") {
      ++feasible[static_cast<std::size_t>(level)];
      utility[static_cast<std::size_t>(level)] += row.utility_ratio ? row.utility_ratio->value() : 0.0;
    } else {
      check.expect(row.status == "infeasible", "unexpected status " + row.status);
    }
  }
  std::ostringstream detail;
  detail.precision(3);
  double last_rate = 2.0;
  double last_utility = 2.0;
  for (std::size_t level = 0; level < 5; ++level) {
    const double rate = static_cast<double>(feasible[level]) / total[level];
    const double mean_utility = utility[level] / total[level];
    check.expect(rate <= last_rate, "feasibility rate rises at mu+pi=" + std::to_string(level));
    check.expect(mean_utility <= last_utility, "mean utility rises at mu+pi=" + std::to_string(level));
    last_rate = rate;
    last_utility = mean_utility;
    detail << (level ? "; " : "") << "L" << level << " feas " << rate << " util " << mean_utility;
  }
  if (out.pass) out.detail = detail.str();
  return out;
}

int run(const std::string& command) { return std::system(command.c_str()); }

std::string slurp(const fs::path& path) {
  try {
    return read_text_file(path.string());
  } catch (const Error&) {
    return {};
  }
}

// AC10
Outcome determinism() {
  Outcome out;
  Check check{out};
  const std::string cli = DIRE_CLI_PATH;
  const fs::path root = fs::temp_directory_path() / "dire-acceptance";
  fs::remove_all(root);
  const auto data = [](const char* name) { return dtest::data_path(name); };
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"syn1.json", "generate --kind syn1 --mu 2 --pi 2 --seed 7 --m 12 --n 20 --k 3 --out {}"},
      {"syn2", "generate --kind syn2 --seed 3 --m 10 --n 12 --k 3 --out {}"},
      {"div.json", "generate --kind vc-diversity --graph " + data("k4.txt") + " --k 3 --mu 3 --seed 1 --out {}"},
      {"rep.json", "generate --kind vc-representation --graph " + data("triangle.txt") + " --k 2 --pi 2 --out {}"},
      {"cc.json", "generate --kind vc-cc --graph " + data("triangle.txt") + " --k 2 --out {}"},
      {"feasible.txt", "feasible " + data("example1.json") + " --exhaustive --out {}"},
      {"solve.txt", "solve " + data("example1.json") + " --out {}"},
      {"solve-cc.txt", "solve " + data("example1.json") + " --rule cc --exhaustive --seed 5 --out {}"},
      {"oracle.txt", "oracle " + data("example1.json") + " --out {}"},
      {"score.txt", "score " + data("example1.json") + " --committee 1,2 --out {}"},
      {"exp.csv", "experiment --kind syn1 --seeds 1-3 --mu 0,1 --pi 0,1 --m 8 --n 10 --k 3 --rules kborda,cc "
                  "--threads 2 --out {}"},
      {"convert.json", "convert " + data("sample.soc") + " --k 2 --out {}"},
      {"stdout.txt", "solve " + data("example1.json") + " --exhaustive > {}"},
  };
  int compared = 0;
  for (int pass = 0; pass < 2; ++pass) {
    const fs::path dir = root / std::to_string(pass);
    fs::create_directories(dir);
    for (const auto& [target, pattern] : commands) {
      std::string command = pattern;
      command.replace(command.find("{}"), 2, (dir / target).string());
      const int status = run(cli + " " + command);
      check.expect(status == 0, "command failed: " + command);
    }
  }
  for (const auto& [target, pattern] : commands) {
    const fs::path a = root / "0" / target;
    const fs::path b = root / "1" / target;
    if (fs::is_directory(a)) {
      for (const auto& entry : fs::directory_iterator(a)) {
        const auto other = b / entry.path().filename();
        check.expect(fs::exists(other) && slurp(entry.path()) == slurp(other), "differs: " + target);
        ++compared;
      }
    } else {
      const auto bytes = slurp(a);
      check.expect(!bytes.empty() && bytes == slurp(b), "differs: " + target);
      ++compared;
    }
  }
  check.expect(slurp(root / "0" / "stdout.txt").find("score: 12\n") != std::string::npos,
               "solve --exhaustive does not print score 12");
  check.expect(run(cli + " feasible " + data("infeasible.json") + " > /dev/null") != 0, "infeasible exit code");
  fs::remove_all(root);
  if (out.pass) out.detail = std::to_string(compared) + " output files byte-identical across reruns";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::tuple<const char*, const char*, std::function<Outcome()>>> criteria = {
      {"AC1", "golden fixture", golden_fixture},
      {"AC2", "oracle equivalence", oracle_equivalence},
      {"AC3", "solver soundness", soundness},
      {"AC4", "pruning and reduction soundness", pruning_soundness},
      {"AC5", "beta-CC properties", cc_properties},
      {"AC6", "FPT solver", fpt_agreement},
      {"AC7", "vertex cover reductions", reductions},
      {"AC8", "Mallows statistics", mallows},
      {"AC9", "trend reproduction", trends},
      {"AC10", "CLI determinism", determinism},
  };
  int failures = 0;
  for (const auto& [id, name, body] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failures;
    std::printf("[%s] %s %s: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", id, name, outcome.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
