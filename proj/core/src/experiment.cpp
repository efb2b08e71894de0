#include "dire/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <thread>

#include "dire/combinatorics.hpp"
#include "dire/instance_io.hpp"
#include "dire/winner.hpp"

namespace dire {

namespace {

struct Job {
  std::string instance_id;
  std::optional<double> phi;
  int mu = 0;
  int pi = 0;
  RuleKind rule = RuleKind::kKBorda;
  std::optional<SynDataParams> synthetic;
  std::string file;
};

std::string format_phi(double phi) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1f", phi);
  return buffer;
}

std::string format_decimal(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

std::vector<Job> plan_jobs(const ExperimentConfig& config) {
  std::vector<Job> jobs;
  for (RuleKind rule : config.rules) {
    if (config.dataset == DatasetKind::kFiles) {
      for (const auto& file : config.files) {
        Job job;
        job.instance_id = std::filesystem::path(file).stem().string();
        job.rule = rule;
        job.file = file;
        jobs.push_back(std::move(job));
      }
      continue;
    }
    for (std::uint64_t seed : config.seeds) {
      SynDataParams params;
      params.seed = seed;
      params.m = config.m;
      params.n = config.n;
      params.k = config.k;
      params.rule = Rule{rule, std::nullopt};
      if (config.dataset == DatasetKind::kSyn1) {
        params.kind = SynKind::kSyn1;
        for (int mu : config.mus) {
          for (int pi : config.pis) {
            params.mu = mu;
            params.pi = pi;
            Job job;
            job.instance_id = "syn1-mu" + std::to_string(mu) + "-pi" + std::to_string(pi) + "-s" +
                              std::to_string(seed);
            job.phi = 0.5;
            job.mu = mu;
            job.pi = pi;
            job.rule = rule;
            job.synthetic = params;
            jobs.push_back(std::move(job));
          }
        }
      } else {
        params.kind = SynKind::kSyn2;
        const auto phis = config.phis.empty() ? syn2_phis() : config.phis;
        for (double phi : phis) {
          params.phi = phi;
          Job job;
          job.instance_id = "syn2-phi" + format_phi(phi) + "-s" + std::to_string(seed);
          job.phi = phi;
          job.mu = 2;
          job.pi = 2;
          job.rule = rule;
          job.synthetic = params;
          jobs.push_back(std::move(job));
        }
      }
    }
  }
  return jobs;
}

ExperimentRow run_job(const Job& job, const ExperimentConfig& config) {
  const DiReInstance instance = [&] {
    if (job.synthetic) return gen_syndata(*job.synthetic);
    ParseOptions options;
    options.rule_override = Rule{job.rule, std::nullopt};
    options.oracle_cap = config.oracle_cap;
    return parse_instance(job.file, options);
  }();

  ExperimentRow row;
  row.instance_id = job.instance_id;
  row.mu = instance.mu();
  row.pi = instance.pi();
  row.phi = job.phi;
  row.rule = job.rule;

  const bool oracle_scale = binomial(static_cast<std::uint64_t>(instance.candidate_count()),
                                     static_cast<std::uint64_t>(instance.k())) <= config.oracle_cap;
  SolverConfig solver;
  solver.timeout_seconds = config.timeout_seconds;
  solver.max_committees = config.max_committees;

  SolveReport report;
  double elapsed = 0.0;
  for (int rep = 0; rep < config.repetitions; ++rep) {
    switch (config.solver) {
      case SolverChoice::kAuto:
        report = oracle_scale ? brute_force_oracle(instance, config.oracle_cap)
                              : solve_drcwd(instance, solver);
        break;
      case SolverChoice::kOracle:
        report = brute_force_oracle(instance, config.oracle_cap);
        break;
      case SolverChoice::kHeuristic:
        solver.exhaustive = false;
        report = solve_drcwd(instance, solver);
        break;
      case SolverChoice::kExhaustive:
        solver.exhaustive = true;
        report = solve_drcwd(instance, solver);
        break;
    }
    elapsed += report.elapsed_seconds;
  }
  row.status = std::string(to_string(report.status));
  row.elapsed_seconds = elapsed / config.repetitions;
  row.score = report.score;
  row.unconstrained_score = report.unconstrained_score;
  row.utility_ratio = report.utility_ratio;
  row.timed_out = report.timed_out;

  if (report.committee) {
    row.max_unsat_fraction = {0, 1};
  } else if (oracle_scale) {
    row.max_unsat_fraction = min_unsatisfied_fraction(instance, config.oracle_cap);
  } else {
    const auto winner = unconstrained_winner(instance.profile(), instance.rule(), instance.k(),
                                             config.oracle_cap);
    row.max_unsat_fraction = unsatisfied_fraction(instance, winner.committee);
    row.max_unsat_approximate = true;
  }
  return row;
}

}  // namespace

void validate_config(const ExperimentConfig& config) {
  if (config.rules.empty()) throw Error(ErrorCode::kInvalidArgument, "no rules given");
  if (config.dataset != DatasetKind::kFiles && config.seeds.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no seeds given");
  }
  if (config.dataset == DatasetKind::kFiles && config.files.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no instance files given");
  }
  if (!(config.timeout_seconds > 0.0)) throw Error(ErrorCode::kInvalidArgument, "timeout must be positive");
  if (config.repetitions < 1) throw Error(ErrorCode::kInvalidArgument, "repetitions must be positive");
  if (config.max_committees < 1) throw Error(ErrorCode::kInvalidArgument, "max committees must be positive");
}

Fraction min_unsatisfied_fraction(const DiReInstance& instance, std::uint64_t cap) {
  const auto& constraints = instance.constraints();
  if (constraints.empty()) return {0, 1};
  const int m = instance.candidate_count();
  if (binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(instance.k())) > cap) {
    throw Error(ErrorCode::kOracleCapExceeded, "too many committees to scan");
  }
  std::vector<std::vector<char>> members;
  for (const auto& constraint : constraints) {
    std::vector<char> row(static_cast<std::size_t>(m), 0);
    for (CandidateId c : constraint.domain) row[static_cast<std::size_t>(c)] = 1;
    members.push_back(std::move(row));
  }
  std::vector<CandidateId> ids(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) ids[static_cast<std::size_t>(c)] = c;
  std::size_t fewest = constraints.size();
  for_each_combination<CandidateId>(ids, static_cast<std::size_t>(instance.k()),
                                    [&](std::span<const CandidateId> committee) {
                                      std::size_t violated = 0;
                                      for (std::size_t i = 0; i < constraints.size(); ++i) {
                                        int count = 0;
                                        for (CandidateId c : committee) count += members[i][static_cast<std::size_t>(c)];
                                        if (count < constraints[i].bound) ++violated;
                                      }
                                      fewest = std::min(fewest, violated);
                                      return fewest > 0;
                                    });
  return Fraction::make(static_cast<std::int64_t>(fewest), static_cast<std::int64_t>(constraints.size()));
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  const auto jobs = plan_jobs(config);
  std::vector<ExperimentRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        rows[i] = run_job(jobs[i], config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    return to_string(a.rule) < to_string(b.rule);
  });
  return rows;
}

std::string format_csv(const std::vector<ExperimentRow>& rows, bool with_timing) {
  std::string out =
      "instance_id,mu,pi,phi,rule,status,elapsed_s,score,unconstrained_score,utility_ratio,"
      "max_unsat_fraction,max_unsat_approx,timed_out\n";
  for (const auto& row : rows) {
    out += row.instance_id;
    out += ',' + std::to_string(row.mu);
    out += ',' + std::to_string(row.pi);
    out += ',' + (row.phi ? format_phi(*row.phi) : std::string());
    out += ',' + std::string(to_string(row.rule));
    out += ',' + row.status;
    out += ',' + (with_timing ? format_decimal(row.elapsed_seconds) : std::string());
    out += ',' + (row.score ? std::to_string(*row.score) : std::string());
    out += ',' + (row.unconstrained_score ? std::to_string(*row.unconstrained_score) : std::string());
    out += ',' + (row.utility_ratio ? format_decimal(row.utility_ratio->value()) : std::string());
    out += ',' + format_decimal(row.max_unsat_fraction.value());
    out += std::string(",") + (row.max_unsat_approximate ? "1" : "0");
    out += std::string(",") + (row.timed_out ? "1" : "0");
    out += '\n';
  }
  return out;
}

}  // namespace dire
