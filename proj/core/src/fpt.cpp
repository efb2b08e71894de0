#include <algorithm>
#include <chrono>
#include <set>

#include "dire/winner.hpp"

namespace dire {

namespace {

using Clock = std::chrono::steady_clock;

void check_fpt_scope(const DiReInstance& instance) {
  bool unit = instance.pi() >= 1 && instance.mu() == 0;
  for (const auto& bounds : instance.representation_bounds()) {
    for (int bound : bounds) unit = unit && bound == 1;
  }
  if (!unit) {
    throw Error(ErrorCode::kPreconditionViolated,
                "solver needs no candidate attributes, at least one voter attribute and unit "
                "representation bounds");
  }
}

std::vector<Committee> distinct_sets(const DiReInstance& instance) {
  std::set<Committee> unique;
  for (const auto& row : instance.winning_committees()) unique.insert(row.begin(), row.end());
  return {unique.begin(), unique.end()};
}

}  // namespace

std::vector<CandidateId> fpt_prune_dominated(const DiReInstance& instance) {
  check_fpt_scope(instance);
  const auto sets = distinct_sets(instance);
  const int m = instance.candidate_count();
  std::vector<std::vector<char>> hits(static_cast<std::size_t>(m), std::vector<char>(sets.size(), 0));
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (CandidateId c : sets[s]) hits[static_cast<std::size_t>(c)][s] = 1;
  }
  const auto covers = [&](CandidateId x, CandidateId y) {
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (hits[static_cast<std::size_t>(y)][s] && !hits[static_cast<std::size_t>(x)][s]) return false;
    }
    return true;
  };
  const auto& profile = instance.profile();
  std::vector<CandidateId> survivors;
  for (CandidateId y = 0; y < m; ++y) {
    bool dominated = false;
    for (CandidateId x = 0; x < m && !dominated; ++x) {
      if (x == y || !covers(x, y)) continue;
      // Equal coverage keeps the candidate earlier in the priority order.
      dominated = !covers(y, x) || profile.priority_rank(x) < profile.priority_rank(y);
    }
    if (!dominated) survivors.push_back(y);
  }
  return survivors;
}

FptResult fpt_rep_solver(const DiReInstance& instance, const SolverConfig& config,
                         bool prune_dominated) {
  check_fpt_scope(instance);
  const auto sets = distinct_sets(instance);
  const int m = instance.candidate_count();
  const int k = instance.k();
  const auto& profile = instance.profile();

  std::vector<char> usable(static_cast<std::size_t>(m), 1);
  if (prune_dominated) {
    std::fill(usable.begin(), usable.end(), 0);
    for (CandidateId c : fpt_prune_dominated(instance)) usable[static_cast<std::size_t>(c)] = 1;
  }

  const auto scores = candidate_scores(profile, instance.rule().scoring_for(m));
  const auto padding_order = rank_by_score(profile, scores);

  FptResult result;
  std::set<Committee> seen;
  std::vector<CandidateId> chosen;
  std::vector<char> state(static_cast<std::size_t>(m), 0);  // 1 chosen, 2 excluded
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(std::min(config.timeout_seconds, 1e9)));

  const auto record = [&]() {
    auto members = chosen;
    for (CandidateId c : padding_order) {
      if (static_cast<int>(members.size()) == k) break;
      if (state[static_cast<std::size_t>(c)] != 1) members.push_back(c);
    }
    Committee committee(std::move(members));
    if (seen.insert(committee).second) result.committees.push_back(std::move(committee));
  };

  const auto branch = [&](const auto& self) -> bool {
    ++result.branches;
    if (Clock::now() >= deadline || (config.node_limit && result.branches > config.node_limit)) {
      result.timed_out = true;
      return false;
    }
    const Committee* open = nullptr;
    for (const auto& set : sets) {
      const bool hit = std::any_of(set.begin(), set.end(), [&](CandidateId c) {
        return state[static_cast<std::size_t>(c)] == 1;
      });
      if (!hit) {
        open = &set;
        break;
      }
    }
    if (open == nullptr) {
      record();
      return result.committees.size() < config.max_committees;
    }
    if (static_cast<int>(chosen.size()) == k) return true;

    std::vector<CandidateId> options;
    for (CandidateId c : *open) {
      if (usable[static_cast<std::size_t>(c)] && state[static_cast<std::size_t>(c)] == 0) options.push_back(c);
    }
    std::sort(options.begin(), options.end(), [&](CandidateId a, CandidateId b) {
      return profile.priority_rank(a) < profile.priority_rank(b);
    });
    std::vector<CandidateId> excluded;
    bool keep_going = true;
    for (CandidateId c : options) {
      state[static_cast<std::size_t>(c)] = 1;
      chosen.push_back(c);
      keep_going = self(self);
      chosen.pop_back();
      state[static_cast<std::size_t>(c)] = 2;
      excluded.push_back(c);
      if (!keep_going) break;
    }
    for (CandidateId c : excluded) state[static_cast<std::size_t>(c)] = 0;
    return keep_going;
  };
  branch(branch);
  return result;
}

}  // namespace dire
