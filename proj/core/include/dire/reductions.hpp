#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dire/constraints.hpp"

namespace dire {

/// Simple undirected graph on vertices 0..vertex_count-1.
struct InputGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // stored with first < second
  bool cubic = false;                      // claims every degree is 3

  /// Throws kInvalidArgument on self-loops, duplicate edges, bad ids, or a
  /// false cubic claim.
  static InputGraph make(int vertex_count, std::vector<std::pair<int, int>> edges,
                         bool cubic = false);

  int degree(int vertex) const;
  bool is_cubic() const;
};

/// "V E" on the first line, then E lines "u v" with 0-based ids.
InputGraph parse_graph(std::istream& in);
InputGraph read_graph(const std::string& path);
std::string format_graph(const InputGraph& graph);

/// Dummy block attached to one vertex candidate.
struct DummyBlock {
  CandidateId owner = 0;
  CandidateId t1 = 0;
  std::vector<CandidateId> t2;
  std::vector<CandidateId> t3;
};

/// How a generated instance relates to its source graph.
struct ReductionMap {
  std::string kind;  // "vc-diversity", "vc-representation", "vc-cc"
  int cover_size = 0;
  int committee_size = 0;
  std::optional<Score> target_score;              // vc-cc only
  std::vector<std::vector<CandidateId>> vertex_candidates;
  std::vector<std::vector<std::string>> edge_constraints;  // constraint keys per edge
  std::vector<DummyBlock> blocks;
};

struct ReductionInstance {
  DiReInstance instance;
  ReductionMap map;
};

/// Cubic graph, cover size k, 3 <= mu < |C|. Odd mu keeps one candidate
/// per vertex, even mu duplicates the graph. Every group is a candidate
/// pair with bound 1; groups are packed into disjoint attributes.
ReductionInstance reduce_vc_diversity(const InputGraph& graph, int k, int mu, std::uint64_t seed);

/// Representation-only instance: one vertex candidate per vertex, |V| dummy
/// candidates per edge, |E| voters per edge, pi voter attributes, unit
/// bounds. Needs k >= 2 and at least one edge.
ReductionInstance reduce_vc_representation(const InputGraph& graph, int k, int pi);

/// One voter per edge ranking its endpoints first; beta-CC with scoring
/// vector (1, 1, 0, ..., 0). A committee reaching target_score = |E|
/// covers every edge.
ReductionInstance reduce_vc_cc(const InputGraph& graph, int k);

/// Committee that a vertex cover maps to, padded to the committee size.
Committee reduction_witness(const ReductionInstance& reduction, std::span<const int> cover);

/// Vertices of a committee that correspond to graph vertices.
std::vector<int> cover_from_committee(const ReductionMap& map, const Committee& committee);

}  // namespace dire
