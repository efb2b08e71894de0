#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dire/constraints.hpp"

namespace dire {

/// Level-C node: one unary constraint with its (possibly reduced) domain.
struct ConstraintNode {
  std::string key;
  ConstraintKind kind = ConstraintKind::kDiversity;
  int family = -1;  // candidate attribute for diversity nodes, -1 otherwise
  std::vector<CandidateId> domain;
  int bound = 1;
};

/// Four-level constraint graph: size bound k, candidates, constraint nodes
/// and the committee under construction. Edges join each candidate to the
/// nodes whose domain contains it.
struct DiReGraph {
  int k = 0;
  int candidate_count = 0;
  std::vector<ConstraintNode> nodes;
  std::vector<std::vector<int>> candidate_nodes;  // candidate -> node indices
  std::vector<Score> candidate_score;             // used for padding
  std::vector<int> priority_rank;

  int out_degree(CandidateId c) const {
    return static_cast<int>(candidate_nodes[static_cast<std::size_t>(c)].size());
  }
  /// Rebuilds candidate_nodes from the node domains.
  void rebuild_edges();
};

/// Nodes with a zero bound impose nothing and are left out.
DiReGraph build_diregraph(const DiReInstance& instance);

struct Component {
  std::vector<CandidateId> candidates;
  std::vector<int> nodes;
};

/// Connected components of the undirected candidate/constraint graph, in
/// order of their smallest candidate.
std::vector<Component> components(const DiReGraph& graph);

/// False iff |D_i ∩ D_j| < S_i + S_j - k.
bool pairwise_feasible(const ConstraintNode& a, const ConstraintNode& b, int k);

struct DomainReduceResult {
  bool changed = false;
  bool emptied = false;
  std::vector<CandidateId> removed;
  std::size_t skipped = 0;  // candidates whose check exceeded the cap
};

/// Removes every d from D_i such that no S_i-subset of D_i containing d and
/// no S_j-subset of D_j fit together in k seats.
DomainReduceResult domain_reduce(DiReGraph& graph, int i, int j, std::uint64_t combo_cap);

struct SolverConfig {
  double timeout_seconds = 2000.0;
  std::size_t max_committees = 1000;
  std::uint64_t domain_reduce_combo_cap = 100'000;
  std::optional<std::uint64_t> seed;
  std::uint64_t node_limit = 0;  // 0 = unlimited
  bool exhaustive = false;
  bool reduce_domains = true;
};

struct PreprocessReport {
  bool infeasible = false;
  std::string reason;
  std::optional<std::pair<int, int>> pruned_pair;
  int emptied_node = -1;
  std::size_t component_count = 0;
  std::size_t pair_checks = 0;
  std::size_t removed_values = 0;
  std::size_t skipped_reductions = 0;
};

/// Components, unary checks, pairwise tests and queue-driven domain
/// reduction inside each component, then pairwise tests across components.
PreprocessReport preprocess(DiReGraph& graph, const SolverConfig& config);

enum class SearchStatus { kComplete, kStopped, kTimeout, kNodeLimit };

struct SearchStats {
  SearchStatus status = SearchStatus::kComplete;
  std::uint64_t nodes = 0;
  std::size_t committees = 0;
};

/// Returns false to stop the search.
using CommitteeVisitor = std::function<bool(const Committee&)>;

/// Exhaustive depth-first search. Every committee of size k that satisfies
/// the graph's constraints is visited exactly once.
SearchStats for_each_feasible(const DiReGraph& graph, const SolverConfig& config,
                              const CommitteeVisitor& visit);

struct BacktrackResult {
  std::optional<Committee> committee;
  SearchStats stats;
  std::size_t root_width = 0;  // values tried at the root node
};

/// First committee reached by the MRV/MFC search, padded to k with the
/// highest scoring unused candidates. `rotation` rotates the root value
/// order left.
BacktrackResult heuristic_backtrack(const DiReGraph& graph, const SolverConfig& config,
                                    std::size_t rotation = 0);

struct Enumeration {
  std::vector<Committee> committees;
  bool timed_out = false;
  bool truncated = false;  // max_committees reached
  std::uint64_t nodes = 0;
  std::size_t restarts = 0;
};

/// Shift-left restarts of heuristic_backtrack, or the exhaustive search
/// when config.exhaustive is set. Committees are distinct, in discovery
/// order.
Enumeration enumerate_feasible(const DiReGraph& graph, const SolverConfig& config);

}  // namespace dire
