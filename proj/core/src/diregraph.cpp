#include "dire/diregraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "dire/combinatorics.hpp"

namespace dire {

void DiReGraph::rebuild_edges() {
  candidate_nodes.assign(static_cast<std::size_t>(candidate_count), {});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (CandidateId c : nodes[i].domain) {
      candidate_nodes[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
    }
  }
}

DiReGraph build_diregraph(const DiReInstance& instance) {
  DiReGraph graph;
  graph.k = instance.k();
  graph.candidate_count = instance.candidate_count();
  for (const auto& constraint : instance.constraints()) {
    if (constraint.bound <= 0) continue;
    ConstraintNode node;
    node.key = constraint.key;
    node.kind = constraint.kind;
    node.family = constraint.kind == ConstraintKind::kDiversity ? constraint.attribute : -1;
    node.domain = constraint.domain;
    node.bound = constraint.bound;
    graph.nodes.push_back(std::move(node));
  }
  graph.rebuild_edges();
  const auto& profile = instance.profile();
  graph.candidate_score = candidate_scores(profile, instance.rule().scoring_for(graph.candidate_count));
  graph.priority_rank.resize(static_cast<std::size_t>(graph.candidate_count));
  for (CandidateId c = 0; c < graph.candidate_count; ++c) {
    graph.priority_rank[static_cast<std::size_t>(c)] = profile.priority_rank(c);
  }
  return graph;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

std::size_t intersection_size(std::span<const CandidateId> a, std::span<const CandidateId> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

std::vector<Component> components(const DiReGraph& graph) {
  const auto m = static_cast<std::size_t>(graph.candidate_count);
  DisjointSets sets(m + graph.nodes.size());
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    for (CandidateId c : graph.nodes[i].domain) sets.unite(c, static_cast<int>(m + i));
  }
  std::vector<int> index(m + graph.nodes.size(), -1);
  std::vector<Component> result;
  auto component_of = [&](int vertex) -> Component& {
    const int root = sets.find(vertex);
    auto& slot = index[static_cast<std::size_t>(root)];
    if (slot < 0) {
      slot = static_cast<int>(result.size());
      result.emplace_back();
    }
    return result[static_cast<std::size_t>(slot)];
  };
  for (CandidateId c = 0; c < graph.candidate_count; ++c) component_of(c).candidates.push_back(c);
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    component_of(static_cast<int>(m + i)).nodes.push_back(static_cast<int>(i));
  }
  return result;
}

bool pairwise_feasible(const ConstraintNode& a, const ConstraintNode& b, int k) {
  const auto overlap = static_cast<long long>(intersection_size(a.domain, b.domain));
  return overlap >= static_cast<long long>(a.bound) + b.bound - k;
}

DomainReduceResult domain_reduce(DiReGraph& graph, int i, int j, std::uint64_t combo_cap) {
  auto& target = graph.nodes[static_cast<std::size_t>(i)];
  const auto& other = graph.nodes[static_cast<std::size_t>(j)];
  DomainReduceResult result;
  const auto si = static_cast<std::size_t>(target.bound);
  const auto sj = static_cast<std::size_t>(other.bound);
  const auto k = static_cast<std::size_t>(graph.k);
  if (target.domain.size() < si || other.domain.size() < sj) {
    result.removed = target.domain;
    result.changed = !target.domain.empty();
    result.emptied = true;
    target.domain.clear();
    return result;
  }
  const std::uint64_t combos =
      saturating_mul(binomial(target.domain.size() - 1, si - 1), binomial(other.domain.size(), sj));

  std::vector<CandidateId> kept;
  std::vector<CandidateId> rest;
  for (CandidateId d : target.domain) {
    if (combos > combo_cap) {
      ++result.skipped;
      kept.push_back(d);
      continue;
    }
    rest.clear();
    for (CandidateId c : target.domain) {
      if (c != d) rest.push_back(c);
    }
    bool supported = false;
    for_each_combination<CandidateId>(rest, si - 1, [&](std::span<const CandidateId> partial) {
      std::vector<CandidateId> a(partial.begin(), partial.end());
      a.insert(std::lower_bound(a.begin(), a.end(), d), d);
      for_each_combination<CandidateId>(other.domain, sj, [&](std::span<const CandidateId> b) {
        const std::size_t joint = a.size() + b.size() - intersection_size(a, b);
        supported = joint <= k;
        return !supported;
      });
      return !supported;
    });
    if (supported) {
      kept.push_back(d);
    } else {
      result.removed.push_back(d);
    }
  }
  result.changed = !result.removed.empty();
  target.domain = std::move(kept);
  result.emptied = target.domain.empty();
  return result;
}

PreprocessReport preprocess(DiReGraph& graph, const SolverConfig& config) {
  PreprocessReport report;
  const auto fail_node = [&](int node, std::string reason) {
    report.infeasible = true;
    report.emptied_node = node;
    report.reason = std::move(reason);
  };

  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& node = graph.nodes[i];
    if (node.domain.size() < static_cast<std::size_t>(node.bound) || node.bound > graph.k) {
      fail_node(static_cast<int>(i), node.key + " cannot reach its bound");
      return report;
    }
  }

  const auto parts = components(graph);
  report.component_count = parts.size();
  std::vector<int> part_of(graph.nodes.size(), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int node : parts[p].nodes) part_of[static_cast<std::size_t>(node)] = static_cast<int>(p);
  }

  const std::size_t count = graph.nodes.size();
  for (const auto& part : parts) {
    if (part.nodes.size() < 2) continue;
    std::deque<std::pair<int, int>> queue;
    std::vector<char> queued(count * count, 0);
    const auto push = [&](int a, int b) {
      auto& flag = queued[static_cast<std::size_t>(a) * count + static_cast<std::size_t>(b)];
      if (flag) return;
      flag = 1;
      queue.emplace_back(a, b);
    };
    for (int a : part.nodes) {
      for (int b : part.nodes) {
        if (a != b) push(a, b);
      }
    }
    while (!queue.empty()) {
      const auto [a, b] = queue.front();
      queue.pop_front();
      queued[static_cast<std::size_t>(a) * count + static_cast<std::size_t>(b)] = 0;
      ++report.pair_checks;
      if (!pairwise_feasible(graph.nodes[static_cast<std::size_t>(a)],
                             graph.nodes[static_cast<std::size_t>(b)], graph.k)) {
        report.infeasible = true;
        report.pruned_pair = std::make_pair(a, b);
        report.reason = graph.nodes[static_cast<std::size_t>(a)].key + " and " +
                        graph.nodes[static_cast<std::size_t>(b)].key + " cannot both be met";
        return report;
      }
      if (!config.reduce_domains) continue;
      const auto reduced = domain_reduce(graph, a, b, config.domain_reduce_combo_cap);
      report.skipped_reductions += reduced.skipped;
      report.removed_values += reduced.removed.size();
      const auto& node = graph.nodes[static_cast<std::size_t>(a)];
      if (reduced.emptied || node.domain.size() < static_cast<std::size_t>(node.bound)) {
        graph.rebuild_edges();
        fail_node(a, node.key + " lost every supported candidate");
        return report;
      }
      if (reduced.changed) {
        for (int x : part.nodes) {
          if (x != a && x != b) push(x, a);
        }
      }
    }
  }
  graph.rebuild_edges();

  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (part_of[a] == part_of[b]) continue;
      ++report.pair_checks;
      if (!pairwise_feasible(graph.nodes[a], graph.nodes[b], graph.k)) {
        report.infeasible = true;
        report.pruned_pair = std::make_pair(static_cast<int>(a), static_cast<int>(b));
        report.reason = graph.nodes[a].key + " and " + graph.nodes[b].key + " cannot both be met";
        return report;
      }
    }
  }
  return report;
}

}  // namespace dire
