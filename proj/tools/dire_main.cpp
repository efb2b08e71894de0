// dire: command-line front end for DiRe committee selection.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "dire/dire.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimeout = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DIRE_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw dire::Error(dire::ErrorCode::kInvalidArgument, std::string("DIRE_SEED is not a number: ") + env);
    }
  }
  return 0;
}

std::optional<dire::Rule> rule_from_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto kind = dire::parse_rule_kind(text);
  if (!kind) throw dire::Error(dire::ErrorCode::kInvalidArgument, "unknown rule '" + text + "'");
  return dire::Rule{*kind, std::nullopt};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  for (std::string part; std::getline(stream, part, ',');) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

// "1-5,9" -> 1 2 3 4 5 9
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (const auto& part : split_list(text)) {
    const auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        seeds.push_back(std::stoull(part));
      } else {
        const auto lo = std::stoull(part.substr(0, dash));
        const auto hi = std::stoull(part.substr(dash + 1));
        for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
      }
    } catch (const std::exception&) {
      throw dire::Error(dire::ErrorCode::kInvalidArgument, "bad seed list entry '" + part + "'");
    }
  }
  return seeds;
}

template <typename T>
std::vector<T> parse_number_list(const std::string& text, const char* what) {
  std::vector<T> values;
  for (const auto& part : split_list(text)) {
    try {
      if constexpr (std::is_floating_point_v<T>) {
        values.push_back(static_cast<T>(std::stod(part)));
      } else {
        values.push_back(static_cast<T>(std::stoll(part)));
      }
    } catch (const std::exception&) {
      throw dire::Error(dire::ErrorCode::kInvalidArgument, std::string("bad ") + what + " '" + part + "'");
    }
  }
  return values;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    dire::write_text_file(path, text);
  }
}

std::string committee_line(const dire::DiReInstance& instance, const dire::Committee& committee) {
  std::string line = committee.to_string();
  if (!instance.candidate_names().empty()) {
    line += " (";
    bool first = true;
    for (dire::CandidateId c : committee) {
      if (!first) line += ", ";
      line += instance.candidate_names()[static_cast<std::size_t>(c)];
      first = false;
    }
    line += ")";
  }
  return line;
}

std::string format_report(const dire::DiReInstance& instance, const dire::SolveReport& report,
                          bool timing) {
  std::ostringstream out;
  out << "status: " << dire::to_string(report.status) << '\n';
  out << "mode: " << dire::to_string(report.mode) << '\n';
  out << "rule: " << dire::to_string(instance.rule().kind) << '\n';
  if (report.committee) out << "committee: " << committee_line(instance, *report.committee) << '\n';
  if (report.score) out << "score: " << *report.score << '\n';
  if (report.unconstrained_score) out << "unconstrained_score: " << *report.unconstrained_score << '\n';
  if (report.utility_ratio) {
    char decimal[32];
    std::snprintf(decimal, sizeof decimal, "%.6f", report.utility_ratio->value());
    out << "utility_ratio: " << report.utility_ratio->to_string() << " (" << decimal << ")\n";
  }
  out << "committees_examined: " << report.committees_examined << '\n';
  if (report.timed_out) out << "timed_out: yes\n";
  if (timing) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.6f", report.elapsed_seconds);
    out << "elapsed_s: " << elapsed << '\n';
  }
  return out.str();
}

int exit_for(const dire::SolveReport& report) {
  switch (report.status) {
    case dire::SolveStatus::kInfeasible: return kExitInfeasible;
    case dire::SolveStatus::kTimeout: return kExitTimeout;
    default: return kExitOk;
  }
}

struct SolverFlags {
  double timeout = 2000.0;
  std::size_t max_committees = 1000;
  std::uint64_t combo_cap = 100'000;
  std::optional<std::uint64_t> seed;
  bool exhaustive = false;

  void add_to(CLI::App* app) {
    app->add_option("--timeout", timeout, "Search budget in seconds")->check(CLI::PositiveNumber);
    app->add_option("--max-committees", max_committees, "Enumeration cap")->check(CLI::PositiveNumber);
    app->add_option("--combo-cap", combo_cap, "Domain reduction combination cap")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Randomise value-order ties with this seed");
    app->add_flag("--exhaustive", exhaustive, "Complete search instead of shift-left restarts");
  }

  dire::SolverConfig config() const {
    dire::SolverConfig config;
    config.timeout_seconds = timeout;
    config.max_committees = max_committees;
    config.domain_reduce_combo_cap = combo_cap;
    config.seed = seed;
    config.exhaustive = exhaustive;
    return config;
  }
};

struct InstanceFlags {
  std::string path;
  std::string rule;
  bool allow_zero = false;

  void add_to(CLI::App* app) {
    app->add_option("instance", path, "Instance JSON file")->required();
    app->add_option("--rule", rule, "kborda, cc or monroe (overrides the file)");
    app->add_flag("--allow-zero-bounds", allow_zero, "Accept lower bounds of 0");
  }

  dire::DiReInstance load() const {
    dire::ParseOptions options;
    options.rule_override = rule_from_flag(rule);
    options.allow_zero_bounds = allow_zero;
    return dire::parse_instance(path, options);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DiRe committee selection: diversity and representation constrained multiwinner elections"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // generate
  auto* generate = app.add_subcommand("generate", "Write a synthetic or reduction instance");
  std::string gen_kind;
  int gen_mu = 0;
  int gen_pi = 0;
  std::optional<double> gen_phi;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_graph;
  std::optional<int> gen_k;
  int gen_m = 50;
  int gen_n = 100;
  std::string gen_rule = "kborda";
  std::string gen_out;
  std::string gen_map;
  generate->add_option("--kind", gen_kind, "syn1, syn2, vc-diversity, vc-representation or vc-cc")
      ->required()
      ->check(CLI::IsMember({"syn1", "syn2", "vc-diversity", "vc-representation", "vc-cc"}));
  generate->add_option("--mu", gen_mu, "Candidate attributes (syn1, vc-diversity)");
  generate->add_option("--pi", gen_pi, "Voter attributes (syn1, vc-representation)");
  generate->add_option("--phi", gen_phi, "Mallows dispersion (syn2; omit for the full sweep)");
  generate->add_option("--seed", gen_seed, "Generator seed (default: DIRE_SEED or 0)");
  generate->add_option("--graph", gen_graph, "Graph file for reductions");
  generate->add_option("--k", gen_k, "Committee size (synthetic) or cover size (reductions)");
  generate->add_option("--m", gen_m, "Candidates (synthetic)");
  generate->add_option("--n", gen_n, "Voters (synthetic)");
  generate->add_option("--rule", gen_rule, "Rule used for winning committees (synthetic)");
  generate->add_option("--out", gen_out, "Output file, or directory for a syn2 sweep")->required();
  generate->add_option("--map", gen_map, "Sidecar map path for reductions (default <out>.map.json)");
  generate->callback([&] {
    const std::uint64_t seed = gen_seed ? *gen_seed : default_seed();
    if (gen_kind == "syn1" || gen_kind == "syn2") {
      dire::SynDataParams params;
      params.kind = gen_kind == "syn1" ? dire::SynKind::kSyn1 : dire::SynKind::kSyn2;
      params.mu = gen_mu;
      params.pi = gen_pi;
      params.seed = seed;
      params.m = gen_m;
      params.n = gen_n;
      params.k = gen_k.value_or(6);
      params.rule = *rule_from_flag(gen_rule);
      if (gen_phi) params.phi = *gen_phi;
      if (params.kind == dire::SynKind::kSyn2 && !gen_phi) {
        std::filesystem::create_directories(gen_out);
        const auto phis = dire::syn2_phis();
        const auto instances = dire::syn2_sweep(params);
        for (std::size_t i = 0; i < instances.size(); ++i) {
          char name[64];
          std::snprintf(name, sizeof name, "syn2-phi%.1f-s%llu.json", phis[i],
                        static_cast<unsigned long long>(seed));
          dire::write_instance(instances[i], (std::filesystem::path(gen_out) / name).string());
        }
        return;
      }
      dire::write_instance(dire::gen_syndata(params), gen_out);
      return;
    }
    if (gen_graph.empty()) throw CLI::ValidationError("--graph", "reductions need a graph file");
    if (!gen_k) throw CLI::ValidationError("--k", "reductions need a cover size");
    const auto graph = dire::read_graph(gen_graph);
    const auto reduction = gen_kind == "vc-diversity"
                               ? dire::reduce_vc_diversity(graph, *gen_k, gen_mu, seed)
                           : gen_kind == "vc-representation"
                               ? dire::reduce_vc_representation(graph, *gen_k, std::max(gen_pi, 1))
                               : dire::reduce_vc_cc(graph, *gen_k);
    dire::write_instance(reduction.instance, gen_out);
    const std::string map_path = gen_map.empty() ? gen_out + ".map.json" : gen_map;
    dire::write_text_file(map_path, dire::reduction_map_to_json(reduction.map).dump(2) + "\n");
  });

  // feasible
  auto* feasible = app.add_subcommand("feasible", "List DiRe committees or report INFEASIBLE");
  InstanceFlags feasible_instance;
  SolverFlags feasible_solver;
  std::string feasible_out;
  feasible_instance.add_to(feasible);
  feasible_solver.add_to(feasible);
  feasible->add_option("--out", feasible_out, "Output file (default stdout)");
  feasible->callback([&] {
    const auto instance = feasible_instance.load();
    auto graph = dire::build_diregraph(instance);
    const auto config = feasible_solver.config();
    const auto prep = dire::preprocess(graph, config);
    std::string text;
    if (prep.infeasible) {
      text = "INFEASIBLE\n";
      exit_code = kExitInfeasible;
    } else {
      const auto result = dire::enumerate_feasible(graph, config);
      for (const auto& committee : result.committees) text += committee_line(instance, committee) + "\n";
      if (result.committees.empty()) {
        text = result.timed_out ? "TIMEOUT\n" : "INFEASIBLE\n";
        exit_code = result.timed_out ? kExitTimeout : kExitInfeasible;
      } else if (result.timed_out) {
        text += "# timed out; list may be partial\n";
      }
    }
    emit(feasible_out, text);
  });

  // solve
  auto* solve = app.add_subcommand("solve", "Best DiRe committee under the instance rule");
  InstanceFlags solve_instance;
  SolverFlags solve_solver;
  std::string solve_mode = "auto";
  std::string solve_out;
  bool solve_timing = false;
  solve_instance.add_to(solve);
  solve_solver.add_to(solve);
  solve->add_option("--mode", solve_mode, "auto, two-stage, oracle, mu1 or fpt")
      ->check(CLI::IsMember({"auto", "two-stage", "oracle", "mu1", "fpt"}));
  solve->add_option("--out", solve_out, "Output file (default stdout)");
  solve->add_flag("--timing", solve_timing, "Include elapsed time");
  solve->callback([&] {
    const auto instance = solve_instance.load();
    const auto config = solve_solver.config();
    std::string mode = solve_mode;
    if (mode == "auto") {
      const bool mu1 = instance.mu() == 1 && instance.pi() == 0 &&
                       instance.rule().kind == dire::RuleKind::kKBorda;
      mode = mu1 ? "mu1" : "two-stage";
    }
    const auto report = mode == "oracle" ? dire::brute_force_oracle(instance)
                        : mode == "mu1"  ? dire::mu1_fast_path(instance)
                        : mode == "fpt"  ? dire::fpt_solve(instance, config)
                                         : dire::solve_drcwd(instance, config);
    emit(solve_out, format_report(instance, report, solve_timing));
    exit_code = exit_for(report);
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum over all k-committees");
  InstanceFlags oracle_instance;
  std::uint64_t oracle_cap = dire::kDefaultOracleCap;
  std::string oracle_out;
  bool oracle_timing = false;
  oracle_instance.add_to(oracle);
  oracle->add_option("--cap", oracle_cap, "Largest C(m,k) to enumerate");
  oracle->add_option("--out", oracle_out, "Output file (default stdout)");
  oracle->add_flag("--timing", oracle_timing, "Include elapsed time");
  oracle->callback([&] {
    const auto instance = oracle_instance.load();
    const auto report = dire::brute_force_oracle(instance, oracle_cap);
    emit(oracle_out, format_report(instance, report, oracle_timing));
    exit_code = exit_for(report);
  });

  // score
  auto* score = app.add_subcommand("score", "Evaluate one committee");
  InstanceFlags score_instance;
  std::string score_committee;
  std::string score_out;
  score_instance.add_to(score);
  score->add_option("--committee", score_committee, "Comma separated candidate ids")->required();
  score->add_option("--out", score_out, "Output file (default stdout)");
  score->callback([&] {
    const auto instance = score_instance.load();
    const dire::Committee committee(parse_number_list<dire::CandidateId>(score_committee, "candidate id"));
    const auto value = dire::score_committee(instance.profile(), instance.rule(), committee, instance.k());
    const auto check = dire::satisfies(instance, committee);
    std::ostringstream out;
    out << "committee: " << committee_line(instance, committee) << '\n';
    out << "rule: " << dire::to_string(instance.rule().kind) << '\n';
    out << "score: " << value << '\n';
    out << "satisfies: " << (check.ok ? "yes" : "no") << '\n';
    for (const auto& violation : check.violations) {
      out << "violation: " << violation.key << " needs " << violation.required << ", has "
          << violation.actual << " (shortfall " << violation.shortfall() << ")\n";
    }
    out << "unsatisfied_fraction: " << dire::unsatisfied_fraction(instance, committee).to_string() << '\n';
    emit(score_out, out.str());
  });

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Batch runs with CSV metrics");
  std::string exp_kind = "syn1";
  std::string exp_seeds;
  std::string exp_rules = "kborda";
  std::string exp_mus = "0";
  std::string exp_pis = "0";
  std::string exp_phis;
  std::vector<std::string> exp_files;
  dire::ExperimentConfig exp_config;
  std::string exp_solver = "auto";
  bool exp_timing = false;
  experiment->add_option("--kind", exp_kind, "syn1, syn2 or files")->check(CLI::IsMember({"syn1", "syn2", "files"}));
  experiment->add_option("--seeds", exp_seeds, "Seed list such as 1-20 or 3,5,8 (default: DIRE_SEED or 0)");
  experiment->add_option("--rules", exp_rules, "Comma separated rules");
  experiment->add_option("--mu", exp_mus, "Comma separated candidate attribute counts (syn1)");
  experiment->add_option("--pi", exp_pis, "Comma separated voter attribute counts (syn1)");
  experiment->add_option("--phi", exp_phis, "Comma separated dispersions (syn2)");
  experiment->add_option("--files", exp_files, "Instance files (files)");
  experiment->add_option("--m", exp_config.m, "Candidates");
  experiment->add_option("--n", exp_config.n, "Voters");
  experiment->add_option("--k", exp_config.k, "Committee size");
  experiment->add_option("--timeout", exp_config.timeout_seconds, "Per-job budget in seconds");
  experiment->add_option("--repetitions", exp_config.repetitions, "Runs per job (elapsed time is averaged)");
  experiment->add_option("--threads", exp_config.threads, "Concurrent jobs");
  experiment->add_option("--solver", exp_solver, "auto, oracle, heuristic or exhaustive")
      ->check(CLI::IsMember({"auto", "oracle", "heuristic", "exhaustive"}));
  experiment->add_option("--out", exp_config.output, "CSV output file (default stdout)");
  experiment->add_flag("--timing", exp_timing, "Fill the elapsed_s column");
  experiment->callback([&] {
    exp_config.dataset = exp_kind == "syn1"   ? dire::DatasetKind::kSyn1
                         : exp_kind == "syn2" ? dire::DatasetKind::kSyn2
                                              : dire::DatasetKind::kFiles;
    exp_config.seeds = exp_seeds.empty() ? std::vector<std::uint64_t>{default_seed()} : parse_seed_list(exp_seeds);
    exp_config.rules.clear();
    for (const auto& rule : split_list(exp_rules)) exp_config.rules.push_back(rule_from_flag(rule)->kind);
    exp_config.mus = parse_number_list<int>(exp_mus, "mu");
    exp_config.pis = parse_number_list<int>(exp_pis, "pi");
    exp_config.phis = parse_number_list<double>(exp_phis, "phi");
    exp_config.files = exp_files;
    exp_config.solver = exp_solver == "oracle"       ? dire::SolverChoice::kOracle
                        : exp_solver == "heuristic"  ? dire::SolverChoice::kHeuristic
                        : exp_solver == "exhaustive" ? dire::SolverChoice::kExhaustive
                                                     : dire::SolverChoice::kAuto;
    const auto rows = dire::run_experiment(exp_config);
    emit(exp_config.output, dire::format_csv(rows, exp_timing));
  });

  // convert
  auto* convert = app.add_subcommand("convert", "Turn a PrefLib .soc file into an instance");
  std::string convert_in;
  int convert_k = 0;
  std::string convert_rule = "kborda";
  std::string convert_out;
  convert->add_option("input", convert_in, ".soc file")->required();
  convert->add_option("--k", convert_k, "Committee size")->required();
  convert->add_option("--rule", convert_rule, "Instance rule");
  convert->add_option("--out", convert_out, "Output file (default stdout)");
  convert->callback([&] {
    const auto data = dire::read_soc(convert_in);
    const auto instance = dire::instance_from_soc(data, convert_k, *rule_from_flag(convert_rule));
    emit(convert_out, dire::format_instance(instance));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const dire::Error& e) {
    std::cerr << "dire: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "dire: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}
