#include "dire/reductions.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "dire/random.hpp"

namespace dire {

InputGraph InputGraph::make(int vertex_count, std::vector<std::pair<int, int>> edges, bool cubic) {
  if (vertex_count < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  InputGraph graph;
  graph.vertex_count = vertex_count;
  graph.cubic = cubic;
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge " + std::to_string(u) + " " + std::to_string(v) + " leaves the vertex range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    graph.edges.emplace_back(u, v);
  }
  if (cubic && !graph.is_cubic()) throw Error(ErrorCode::kInvalidArgument, "graph is not 3-regular");
  return graph;
}

int InputGraph::degree(int vertex) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
    return e.first == vertex || e.second == vertex;
  }));
}

bool InputGraph::is_cubic() const {
  for (int v = 0; v < vertex_count; ++v) {
    if (degree(v) != 3) return false;
  }
  return true;
}

InputGraph parse_graph(std::istream& in) {
  long long vertices = -1;
  long long edge_count = -1;
  if (!(in >> vertices >> edge_count) || vertices < 0 || edge_count < 0) {
    throw Error(ErrorCode::kParseError, "graph header must be \"V E\"");
  }
  std::vector<std::pair<int, int>> edges;
  for (long long e = 0; e < edge_count; ++e) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::kParseError, "graph edge line " + std::to_string(e + 1) + " is missing");
    }
    edges.emplace_back(u, v);
  }
  return InputGraph::make(static_cast<int>(vertices), std::move(edges));
}

InputGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open graph file " + path);
  return parse_graph(in);
}

std::string format_graph(const InputGraph& graph) {
  std::ostringstream out;
  out << graph.vertex_count << ' ' << graph.edges.size() << '\n';
  for (const auto& [u, v] : graph.edges) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

struct PairGroup {
  std::string label;
  std::vector<int> members;
  int edge = -1;  // source edge, -1 for dummy groups
};

// Greedy packing of groups into attributes whose groups are disjoint.
std::vector<Attribute> pack_groups(const std::vector<PairGroup>& groups, int candidate_count,
                                   std::vector<std::string>& keys) {
  std::vector<Attribute> attributes;
  std::vector<std::vector<char>> used;
  keys.clear();
  for (const auto& group : groups) {
    std::size_t family = 0;
    for (; family < attributes.size(); ++family) {
      const bool clash = std::any_of(group.members.begin(), group.members.end(), [&](int c) {
        return used[family][static_cast<std::size_t>(c)] != 0;
      });
      if (!clash) break;
    }
    if (family == attributes.size()) {
      attributes.push_back({"F" + std::to_string(family + 1), {}, true});
      used.emplace_back(static_cast<std::size_t>(candidate_count), 0);
    }
    for (int c : group.members) used[family][static_cast<std::size_t>(c)] = 1;
    auto members = group.members;
    std::sort(members.begin(), members.end());
    attributes[family].groups.push_back({group.label, std::move(members)});
    keys.push_back("D:" + attributes[family].name + ":" + group.label);
  }
  return attributes;
}

std::vector<Ranking> cyclic_shifts(int count) {
  std::vector<Ranking> rankings;
  Ranking base(static_cast<std::size_t>(count));
  std::iota(base.begin(), base.end(), 0);
  for (int v = 0; v < count; ++v) {
    rankings.push_back(base);
    std::rotate(base.begin(), base.begin() + 1, base.end());
  }
  return rankings;
}

std::string edge_label(std::pair<int, int> edge) {
  return "e" + std::to_string(edge.first) + "-" + std::to_string(edge.second);
}

}  // namespace

ReductionInstance reduce_vc_diversity(const InputGraph& graph, int k, int mu, std::uint64_t seed) {
  if (!graph.is_cubic()) throw Error(ErrorCode::kPreconditionViolated, "graph must be 3-regular");
  const int vertices = graph.vertex_count;
  if (k < 1 || k > vertices) {
    throw Error(ErrorCode::kPreconditionViolated, "cover size must lie in [1, |V|]");
  }
  if (mu < 3) throw Error(ErrorCode::kPreconditionViolated, "mu must be at least 3");
  const bool odd = mu % 2 == 1;
  const int copies = odd ? 1 : 2;
  const int vertex_candidates = copies * vertices;
  const int blocks_per_candidate = mu - 3;
  const int total = vertex_candidates + vertex_candidates * blocks_per_candidate * (2 * mu - 1);
  if (mu >= total) {
    throw Error(ErrorCode::kPreconditionViolated,
                "mu = " + std::to_string(mu) + " outside [3, " + std::to_string(total - 1) + "]");
  }

  ReductionMap map;
  map.kind = "vc-diversity";
  map.cover_size = k;
  map.committee_size = copies * k + copies * vertices * mu * mu - 3 * copies * vertices * mu;
  map.vertex_candidates.resize(static_cast<std::size_t>(vertices));
  for (int v = 0; v < vertices; ++v) {
    for (int copy = 0; copy < copies; ++copy) {
      map.vertex_candidates[static_cast<std::size_t>(v)].push_back(copy * vertices + v);
    }
  }

  std::vector<PairGroup> groups;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [u, v] = graph.edges[e];
    for (int copy = 0; copy < copies; ++copy) {
      groups.push_back({edge_label(graph.edges[e]) + (copy == 0 ? "" : "b"),
                        {copy * vertices + u, copy * vertices + v}, static_cast<int>(e)});
    }
  }

  Rng rng(seed);
  CandidateId next = vertex_candidates;
  std::vector<CandidateId> leftovers;
  for (CandidateId owner = 0; owner < vertex_candidates; ++owner) {
    for (int b = 0; b < blocks_per_candidate; ++b) {
      DummyBlock block;
      block.owner = owner;
      block.t1 = next++;
      for (int i = 0; i < mu - 1; ++i) block.t2.push_back(next++);
      for (int i = 0; i < mu - 1; ++i) block.t3.push_back(next++);
      const std::string tag = std::to_string(owner) + "." + std::to_string(b);
      groups.push_back({"x" + tag, {owner, block.t1}});
      for (std::size_t i = 0; i < block.t2.size(); ++i) {
        groups.push_back({"t" + tag + "." + std::to_string(i), {block.t1, block.t2[i]}});
      }
      for (std::size_t i = 0; i < block.t2.size(); ++i) {
        for (std::size_t j = 0; j < block.t3.size(); ++j) {
          groups.push_back({"u" + tag + "." + std::to_string(i) + "." + std::to_string(j),
                            {block.t2[i], block.t3[j]}});
        }
      }
      auto shuffled = block.t3;
      rng.shuffle(shuffled);
      if (!odd) {
        leftovers.push_back(shuffled.back());
        shuffled.pop_back();
      }
      const std::size_t half = shuffled.size() / 2;
      for (std::size_t i = 0; i < half; ++i) {
        groups.push_back({"p" + tag + "." + std::to_string(i), {shuffled[i], shuffled[half + i]}});
      }
      map.blocks.push_back(std::move(block));
    }
  }
  if (!odd) {
    // Block b of c_i pairs its leftover with block b of c_{m+i}.
    const auto per_copy = static_cast<std::size_t>(vertices * blocks_per_candidate);
    for (std::size_t i = 0; i < per_copy; ++i) {
      const auto& block = map.blocks[i];
      groups.push_back({"q" + std::to_string(block.owner) + "." +
                            std::to_string(static_cast<int>(i) % blocks_per_candidate),
                        {leftovers[i], leftovers[per_copy + i]}});
    }
  }

  std::vector<std::string> keys;
  auto attributes = pack_groups(groups, total, keys);
  map.edge_constraints.resize(graph.edges.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].edge >= 0) map.edge_constraints[static_cast<std::size_t>(groups[g].edge)].push_back(keys[g]);
  }

  BoundTable bounds;
  for (const auto& attribute : attributes) bounds.emplace_back(attribute.groups.size(), 1);
  AttributeScheme scheme;
  scheme.candidate_attributes = std::move(attributes);
  DiReInstance instance(PreferenceProfile(total, cyclic_shifts(total)), std::move(scheme),
                        map.committee_size, Rule{RuleKind::kKBorda, std::nullopt}, std::move(bounds),
                        {});
  return {std::move(instance), std::move(map)};
}

ReductionInstance reduce_vc_representation(const InputGraph& graph, int k, int pi) {
  const int vertices = graph.vertex_count;
  const int edges = static_cast<int>(graph.edges.size());
  if (edges < 1) throw Error(ErrorCode::kPreconditionViolated, "graph needs at least one edge");
  if (k < 2 || k > vertices) {
    throw Error(ErrorCode::kPreconditionViolated, "cover size must lie in [2, |V|]");
  }
  if (pi < 1) throw Error(ErrorCode::kPreconditionViolated, "pi must be at least 1");
  const int total = vertices + edges * vertices;

  std::vector<Ranking> rankings;
  std::vector<Committee> edge_winners;
  for (int y = 0; y < edges; ++y) {
    const auto [i, j] = graph.edges[static_cast<std::size_t>(y)];
    Ranking ranking{i, j};
    const int first_dummy = vertices + y * vertices;
    for (int d = 0; d < vertices; ++d) ranking.push_back(first_dummy + d);
    for (int c = 0; c < vertices; ++c) {
      if (c != i && c != j) ranking.push_back(c);
    }
    for (int d = vertices; d < total; ++d) {
      if (d < first_dummy || d >= first_dummy + vertices) ranking.push_back(d);
    }
    edge_winners.emplace_back(std::vector<CandidateId>(ranking.begin(), ranking.begin() + k));
    for (int z = 0; z < edges; ++z) rankings.push_back(ranking);
  }

  ReductionMap map;
  map.kind = "vc-representation";
  map.cover_size = k;
  map.committee_size = k;
  for (int v = 0; v < vertices; ++v) map.vertex_candidates.push_back({v});
  map.edge_constraints.resize(static_cast<std::size_t>(edges));

  AttributeScheme scheme;
  BoundTable bounds;
  CommitteeTable winners;
  for (int x = 1; x <= pi; ++x) {
    Attribute attribute{"X" + std::to_string(x), {}, false};
    std::vector<Committee> row;
    for (int y = 0; y < edges; ++y) {
      for (int r = 0; r < x; ++r) {
        Group population{"e" + std::to_string(y) + "m" + std::to_string(r), {}};
        for (int z = 1; z <= edges; ++z) {
          if (z % x == r) population.members.push_back(y * edges + (z - 1));
        }
        if (population.members.empty()) continue;
        map.edge_constraints[static_cast<std::size_t>(y)].push_back("R:" + attribute.name + ":" +
                                                                    population.label);
        attribute.groups.push_back(std::move(population));
        row.push_back(edge_winners[static_cast<std::size_t>(y)]);
      }
    }
    bounds.emplace_back(attribute.groups.size(), 1);
    scheme.voter_attributes.push_back(std::move(attribute));
    winners.push_back(std::move(row));
  }
  DiReInstance instance(PreferenceProfile(total, std::move(rankings)), std::move(scheme), k,
                        Rule{RuleKind::kKBorda, std::nullopt}, {}, std::move(bounds),
                        std::move(winners));
  return {std::move(instance), std::move(map)};
}

ReductionInstance reduce_vc_cc(const InputGraph& graph, int k) {
  const int vertices = graph.vertex_count;
  if (vertices < 2 || graph.edges.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "graph needs at least one edge");
  }
  if (k < 1 || k > vertices) throw Error(ErrorCode::kPreconditionViolated, "k must lie in [1, |V|]");
  std::vector<Ranking> rankings;
  for (const auto& [i, j] : graph.edges) {
    Ranking ranking{i, j};
    for (int c = 0; c < vertices; ++c) {
      if (c != i && c != j) ranking.push_back(c);
    }
    rankings.push_back(std::move(ranking));
  }
  std::vector<Score> values(static_cast<std::size_t>(vertices), 0);
  values[0] = 1;
  values[1] = 1;
  ReductionMap map;
  map.kind = "vc-cc";
  map.cover_size = k;
  map.committee_size = k;
  map.target_score = static_cast<Score>(graph.edges.size());
  for (int v = 0; v < vertices; ++v) map.vertex_candidates.push_back({v});
  map.edge_constraints.resize(graph.edges.size());
  DiReInstance instance(PreferenceProfile(vertices, std::move(rankings)), AttributeScheme{}, k,
                        Rule{RuleKind::kBetaCC, ScoringVector(std::move(values))}, {}, {});
  return {std::move(instance), std::move(map)};
}

Committee reduction_witness(const ReductionInstance& reduction, std::span<const int> cover) {
  const auto& map = reduction.map;
  const int m = reduction.instance.candidate_count();
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::vector<CandidateId> members;
  const auto add = [&](CandidateId c) {
    if (!used[static_cast<std::size_t>(c)]) {
      used[static_cast<std::size_t>(c)] = 1;
      members.push_back(c);
    }
  };
  for (int v : cover) {
    if (v < 0 || v >= static_cast<int>(map.vertex_candidates.size())) {
      throw Error(ErrorCode::kIndexOutOfRange, "cover vertex " + std::to_string(v));
    }
    for (CandidateId c : map.vertex_candidates[static_cast<std::size_t>(v)]) add(c);
  }
  for (const auto& block : map.blocks) {
    add(block.t1);
    for (CandidateId c : block.t3) add(c);
  }
  for (CandidateId c = 0; c < m && static_cast<int>(members.size()) < map.committee_size; ++c) add(c);
  if (static_cast<int>(members.size()) != map.committee_size) {
    throw Error(ErrorCode::kCommitteeSizeMismatch, "cover is larger than the reduction allows");
  }
  return Committee(std::move(members));
}

std::vector<int> cover_from_committee(const ReductionMap& map, const Committee& committee) {
  std::vector<int> cover;
  for (std::size_t v = 0; v < map.vertex_candidates.size(); ++v) {
    const auto& mapped = map.vertex_candidates[v];
    if (std::any_of(mapped.begin(), mapped.end(), [&](CandidateId c) { return committee.contains(c); })) {
      cover.push_back(static_cast<int>(v));
    }
  }
  return cover;
}

}  // namespace dire
