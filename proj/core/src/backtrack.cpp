#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "dire/combinatorics.hpp"
#include "dire/diregraph.hpp"
#include "dire/random.hpp"

namespace dire {

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_after(double seconds) {
  const auto span = std::chrono::duration<double>(std::max(seconds, 0.0));
  const auto capped = std::min(span, std::chrono::duration<double>(1e9));
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(capped);
}

enum class Mode { kFirst, kExhaustive };

class Search {
 public:
  Search(const DiReGraph& graph, const SolverConfig& config, Clock::time_point deadline,
         Mode mode, std::size_t rotation, const CommitteeVisitor* visit)
      : graph_(graph),
        config_(config),
        deadline_(deadline),
        mode_(mode),
        rotation_(rotation),
        visit_(visit) {
    const auto m = static_cast<std::size_t>(graph.candidate_count);
    tie_rank_ = graph.priority_rank;
    if (config.seed) {
      std::vector<CandidateId> order(m);
      std::iota(order.begin(), order.end(), 0);
      Rng rng(*config.seed);
      rng.shuffle(order);
      for (std::size_t r = 0; r < m; ++r) tie_rank_[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
    }
    state_.assign(m, kFree);
    inflow_.assign(graph.nodes.size(), 0);
    free_.resize(graph.nodes.size());
    family_count_ = 0;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
      free_[i] = static_cast<int>(graph.nodes[i].domain.size());
      family_count_ = std::max(family_count_, graph.nodes[i].family + 1);
      auto order = graph.nodes[i].domain;
      std::sort(order.begin(), order.end(), [&](CandidateId a, CandidateId b) {
        if (graph.out_degree(a) != graph.out_degree(b)) return graph.out_degree(a) > graph.out_degree(b);
        return tie_rank_[static_cast<std::size_t>(a)] < tie_rank_[static_cast<std::size_t>(b)];
      });
      value_order_.push_back(std::move(order));
    }
    family_deficit_.assign(static_cast<std::size_t>(family_count_), 0);
  }

  SearchStats run() {
    dfs(0);
    stats_.committees = emitted_;
    return stats_;
  }

  std::optional<Committee> first() const { return first_; }
  std::size_t root_width() const { return root_width_; }

 private:
  static constexpr char kFree = 0;
  static constexpr char kChosen = 1;
  static constexpr char kExcluded = 2;

  void include(CandidateId c) {
    state_[static_cast<std::size_t>(c)] = kChosen;
    chosen_.push_back(c);
    for (int node : graph_.candidate_nodes[static_cast<std::size_t>(c)]) {
      ++inflow_[static_cast<std::size_t>(node)];
      --free_[static_cast<std::size_t>(node)];
    }
  }
  void uninclude(CandidateId c) {
    state_[static_cast<std::size_t>(c)] = kFree;
    chosen_.pop_back();
    for (int node : graph_.candidate_nodes[static_cast<std::size_t>(c)]) {
      --inflow_[static_cast<std::size_t>(node)];
      ++free_[static_cast<std::size_t>(node)];
    }
  }
  void exclude(CandidateId c) {
    state_[static_cast<std::size_t>(c)] = kExcluded;
    for (int node : graph_.candidate_nodes[static_cast<std::size_t>(c)]) --free_[static_cast<std::size_t>(node)];
  }
  void unexclude(CandidateId c) {
    state_[static_cast<std::size_t>(c)] = kFree;
    for (int node : graph_.candidate_nodes[static_cast<std::size_t>(c)]) ++free_[static_cast<std::size_t>(node)];
  }

  int deficit(std::size_t node) const {
    return std::max(graph_.nodes[node].bound - inflow_[node], 0);
  }

  bool consistent() {
    const int seats = graph_.k - static_cast<int>(chosen_.size());
    if (seats < 0) return false;
    std::fill(family_deficit_.begin(), family_deficit_.end(), 0);
    for (std::size_t i = 0; i < graph_.nodes.size(); ++i) {
      const int need = deficit(i);
      if (need > free_[i] || need > seats) return false;
      const int family = graph_.nodes[i].family;
      if (family >= 0) {
        auto& sum = family_deficit_[static_cast<std::size_t>(family)];
        sum += need;
        if (sum > seats) return false;
      }
    }
    return true;
  }

  // Fewest domain values per unit of remaining demand; ties to the lowest
  // node index.
  int select_node() const {
    int best = -1;
    for (std::size_t i = 0; i < graph_.nodes.size(); ++i) {
      const int need = deficit(i);
      if (need == 0) continue;
      if (best < 0) {
        best = static_cast<int>(i);
        continue;
      }
      const auto b = static_cast<std::size_t>(best);
      const auto lhs = static_cast<long long>(graph_.nodes[i].domain.size()) * deficit(b);
      const auto rhs = static_cast<long long>(graph_.nodes[b].domain.size()) * need;
      if (lhs < rhs) best = static_cast<int>(i);
    }
    return best;
  }

  bool out_of_budget() {
    ++stats_.nodes;
    if (config_.node_limit != 0 && stats_.nodes > config_.node_limit) {
      stats_.status = SearchStatus::kNodeLimit;
      return true;
    }
    if (Clock::now() >= deadline_) {
      stats_.status = SearchStatus::kTimeout;
      return true;
    }
    return false;
  }

  bool emit(const Committee& committee) {
    ++emitted_;
    if (mode_ == Mode::kFirst) {
      first_ = committee;
      stats_.status = SearchStatus::kStopped;
      return false;
    }
    if (visit_ && !(*visit_)(committee)) {
      stats_.status = SearchStatus::kStopped;
      return false;
    }
    return true;
  }

  bool leaf() {
    const auto seats = static_cast<std::size_t>(graph_.k) - chosen_.size();
    if (mode_ == Mode::kFirst) {
      std::vector<CandidateId> unused;
      for (CandidateId c = 0; c < graph_.candidate_count; ++c) {
        if (state_[static_cast<std::size_t>(c)] != kChosen) unused.push_back(c);
      }
      std::sort(unused.begin(), unused.end(), [&](CandidateId a, CandidateId b) {
        const auto sa = graph_.candidate_score[static_cast<std::size_t>(a)];
        const auto sb = graph_.candidate_score[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return tie_rank_[static_cast<std::size_t>(a)] < tie_rank_[static_cast<std::size_t>(b)];
      });
      auto members = chosen_;
      members.insert(members.end(), unused.begin(), unused.begin() + static_cast<std::ptrdiff_t>(seats));
      return emit(Committee(std::move(members)));
    }
    std::vector<CandidateId> open;
    for (CandidateId c = 0; c < graph_.candidate_count; ++c) {
      if (state_[static_cast<std::size_t>(c)] == kFree) open.push_back(c);
    }
    bool first = true;
    return for_each_combination<CandidateId>(open, seats, [&](std::span<const CandidateId> extra) {
      if (!first && out_of_budget()) return false;
      first = false;
      auto members = chosen_;
      members.insert(members.end(), extra.begin(), extra.end());
      return emit(Committee(std::move(members)));
    });
  }

  // A node whose deficit equals its free values needs all of them. Returns
  // false on a conflict; `forced` collects the inclusions for undoing.
  bool propagate(std::vector<CandidateId>& forced) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < graph_.nodes.size(); ++i) {
        const int need = deficit(i);
        if (need == 0 || need != free_[i]) continue;
        for (CandidateId c : graph_.nodes[i].domain) {
          if (state_[static_cast<std::size_t>(c)] != kFree) continue;
          include(c);
          forced.push_back(c);
        }
        changed = true;
        if (!consistent()) return false;
      }
    }
    return true;
  }

  // Returns false once the search must stop.
  bool dfs(int depth) {
    if (out_of_budget()) return false;
    if (!consistent()) return true;
    std::vector<CandidateId> forced;
    const bool keep_going = propagate(forced) ? branch(depth) : true;
    for (auto it = forced.rbegin(); it != forced.rend(); ++it) uninclude(*it);
    return keep_going;
  }

  bool branch(int depth) {
    const int node = select_node();
    if (node < 0) return leaf();

    std::vector<CandidateId> values;
    for (CandidateId c : value_order_[static_cast<std::size_t>(node)]) {
      if (state_[static_cast<std::size_t>(c)] == kFree) values.push_back(c);
    }
    if (depth == 0) {
      root_width_ = values.size();
      if (!values.empty()) {
        std::rotate(values.begin(),
                    values.begin() + static_cast<std::ptrdiff_t>(rotation_ % values.size()),
                    values.end());
      }
    }
    std::vector<CandidateId> excluded;
    bool keep_going = true;
    for (CandidateId c : values) {
      include(c);
      keep_going = dfs(depth + 1);
      uninclude(c);
      if (!keep_going) break;
      exclude(c);
      excluded.push_back(c);
      if (!consistent()) break;
    }
    for (auto it = excluded.rbegin(); it != excluded.rend(); ++it) unexclude(*it);
    return keep_going;
  }

  const DiReGraph& graph_;
  const SolverConfig& config_;
  Clock::time_point deadline_;
  Mode mode_;
  std::size_t rotation_;
  const CommitteeVisitor* visit_;

  std::vector<int> tie_rank_;
  std::vector<char> state_;
  std::vector<int> inflow_;
  std::vector<int> free_;
  std::vector<CandidateId> chosen_;
  std::vector<std::vector<CandidateId>> value_order_;
  int family_count_ = 0;
  std::vector<int> family_deficit_;

  SearchStats stats_;
  std::size_t emitted_ = 0;
  std::size_t root_width_ = 0;
  std::optional<Committee> first_;
};

BacktrackResult backtrack_until(const DiReGraph& graph, const SolverConfig& config,
                                std::size_t rotation, Clock::time_point deadline) {
  Search search(graph, config, deadline, Mode::kFirst, rotation, nullptr);
  BacktrackResult result;
  result.stats = search.run();
  result.committee = search.first();
  result.root_width = search.root_width();
  return result;
}

}  // namespace

SearchStats for_each_feasible(const DiReGraph& graph, const SolverConfig& config,
                              const CommitteeVisitor& visit) {
  Search search(graph, config, deadline_after(config.timeout_seconds), Mode::kExhaustive, 0, &visit);
  return search.run();
}

BacktrackResult heuristic_backtrack(const DiReGraph& graph, const SolverConfig& config,
                                    std::size_t rotation) {
  return backtrack_until(graph, config, rotation, deadline_after(config.timeout_seconds));
}

Enumeration enumerate_feasible(const DiReGraph& graph, const SolverConfig& config) {
  Enumeration result;
  const std::size_t cap = std::max<std::size_t>(config.max_committees, 1);
  if (config.exhaustive) {
    const auto stats = for_each_feasible(graph, config, [&](const Committee& committee) {
      result.committees.push_back(committee);
      if (result.committees.size() >= cap) {
        result.truncated = true;
        return false;
      }
      return true;
    });
    result.nodes = stats.nodes;
    result.timed_out = stats.status == SearchStatus::kTimeout || stats.status == SearchStatus::kNodeLimit;
    result.restarts = 1;
    return result;
  }

  const auto deadline = deadline_after(config.timeout_seconds);
  std::set<Committee> seen;
  std::size_t width = 1;
  for (std::size_t rotation = 0; rotation < width; ++rotation) {
    const auto run = backtrack_until(graph, config, rotation, deadline);
    ++result.restarts;
    result.nodes += run.stats.nodes;
    if (rotation == 0) width = std::max<std::size_t>(run.root_width, 1);
    if (run.committee && seen.insert(*run.committee).second) {
      result.committees.push_back(*run.committee);
      if (result.committees.size() >= cap) {
        result.truncated = rotation + 1 < width;
        break;
      }
    }
    if (run.stats.status == SearchStatus::kTimeout || run.stats.status == SearchStatus::kNodeLimit) {
      result.timed_out = true;
      break;
    }
    if (!run.committee) break;
  }
  return result;
}

}  // namespace dire
