#include "dire/synthetic.hpp"

#include <algorithm>
#include <numeric>

#include "dire/mallows.hpp"

namespace dire {

namespace {

constexpr std::uint64_t kSigmaStream = 1;
constexpr std::uint64_t kPreferenceStream = 2;
constexpr std::uint64_t kBoundStream = 3;
constexpr std::uint64_t kCandidateAttributeStream = 100;
constexpr std::uint64_t kVoterAttributeStream = 200;
constexpr std::uint64_t kDiversityBoundStream = 300;
constexpr std::uint64_t kRepresentationBoundStream = 400;

Attribute make_attribute(std::string name, std::vector<std::vector<int>> groups) {
  Attribute attribute;
  attribute.name = std::move(name);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    attribute.groups.push_back({"g" + std::to_string(g + 1), std::move(groups[g])});
  }
  return attribute;
}

}  // namespace

std::string_view to_string(SynKind kind) { return kind == SynKind::kSyn1 ? "syn1" : "syn2"; }

std::vector<std::vector<int>> partition_at_cuts(std::span<const int> order,
                                                std::span<const int> cuts) {
  std::vector<int> sorted(cuts.begin(), cuts.end());
  std::sort(sorted.begin(), sorted.end());
  const int count = static_cast<int>(order.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 2 || sorted[i] > count || (i > 0 && sorted[i] == sorted[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "cut positions must be distinct values in [2, " +
                                                   std::to_string(count) + "]");
    }
  }
  std::vector<std::vector<int>> groups;
  int start = 0;
  sorted.push_back(count + 1);
  for (int cut : sorted) {
    std::vector<int> run(order.begin() + start, order.begin() + (cut - 1));
    std::sort(run.begin(), run.end());
    groups.push_back(std::move(run));
    start = cut - 1;
  }
  return groups;
}

PartitionResult partition_attribute(int entity_count, int k, Rng& rng) {
  if (entity_count < 2 || k < 2) {
    throw Error(ErrorCode::kPreconditionViolated, "partitioning needs at least 2 entities and k >= 2");
  }
  PartitionResult result;
  result.requested_groups = static_cast<int>(rng.uniform_int(2, k));
  const int q = std::min(result.requested_groups, entity_count);
  result.clamped = q != result.requested_groups;

  std::vector<int> order(static_cast<std::size_t>(entity_count));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<int> positions(static_cast<std::size_t>(entity_count - 1));
  std::iota(positions.begin(), positions.end(), 2);
  // Partial Fisher-Yates picks q - 1 distinct cut positions.
  for (int i = 0; i < q - 1; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.below(positions.size() - static_cast<std::size_t>(i));
    std::swap(positions[static_cast<std::size_t>(i)], positions[j]);
  }
  positions.resize(static_cast<std::size_t>(q - 1));
  result.groups = partition_at_cuts(order, positions);
  return result;
}

SampledBounds sample_constraints(const AttributeScheme& scheme, int k, std::uint64_t seed) {
  const Rng root(seed);
  SampledBounds bounds;
  for (std::size_t a = 0; a < scheme.candidate_attributes.size(); ++a) {
    Rng rng = root.substream(kDiversityBoundStream + a);
    std::vector<int> row;
    for (const auto& group : scheme.candidate_attributes[a].groups) {
      const int high = std::min(k, static_cast<int>(group.members.size()));
      row.push_back(static_cast<int>(rng.uniform_int(1, high)));
    }
    bounds.diversity.push_back(std::move(row));
  }
  for (std::size_t a = 0; a < scheme.voter_attributes.size(); ++a) {
    Rng rng = root.substream(kRepresentationBoundStream + a);
    std::vector<int> row;
    for (std::size_t p = 0; p < scheme.voter_attributes[a].groups.size(); ++p) {
      row.push_back(static_cast<int>(rng.uniform_int(1, k)));
    }
    bounds.representation.push_back(std::move(row));
  }
  return bounds;
}

DiReInstance gen_syndata(const SynDataParams& params) {
  int mu = params.mu;
  int pi = params.pi;
  double phi = params.phi;
  if (params.kind == SynKind::kSyn1) {
    phi = 0.5;
    if (mu < 0 || mu > 4 || pi < 0 || pi > 4) {
      throw Error(ErrorCode::kPreconditionViolated, "syn1 needs mu and pi in [0, 4]");
    }
  } else {
    mu = 2;
    pi = 2;
  }
  if (params.m < 2 || params.n < 2 || params.k < 2 || params.k > params.m) {
    throw Error(ErrorCode::kPreconditionViolated, "synthetic data needs m, n >= 2 and 2 <= k <= m");
  }
  const Rng root(params.seed);

  Rng sigma_rng = root.substream(kSigmaStream);
  Ranking sigma(static_cast<std::size_t>(params.m));
  std::iota(sigma.begin(), sigma.end(), 0);
  sigma_rng.shuffle(sigma);
  const auto profile =
      sample_mallows({phi, sigma, root.substream(kPreferenceStream).seed()}, params.n);

  AttributeScheme scheme;
  for (int a = 0; a < mu; ++a) {
    Rng rng = root.substream(kCandidateAttributeStream + static_cast<std::uint64_t>(a));
    auto part = partition_attribute(params.m, params.k, rng);
    scheme.candidate_attributes.push_back(
        make_attribute("A" + std::to_string(a + 1), std::move(part.groups)));
  }
  for (int a = 0; a < pi; ++a) {
    Rng rng = root.substream(kVoterAttributeStream + static_cast<std::uint64_t>(a));
    auto part = partition_attribute(params.n, params.k, rng);
    scheme.voter_attributes.push_back(
        make_attribute("B" + std::to_string(a + 1), std::move(part.groups)));
  }
  auto bounds = sample_constraints(scheme, params.k, root.substream(kBoundStream).seed());
  return DiReInstance(profile, std::move(scheme), params.k, params.rule,
                      std::move(bounds.diversity), std::move(bounds.representation));
}

std::vector<double> syn2_phis() {
  std::vector<double> phis;
  for (int step = 1; step <= 10; ++step) phis.push_back(step / 10.0);
  return phis;
}

std::vector<DiReInstance> syn2_sweep(const SynDataParams& base) {
  std::vector<DiReInstance> instances;
  for (double phi : syn2_phis()) {
    auto params = base;
    params.kind = SynKind::kSyn2;
    params.phi = phi;
    instances.push_back(gen_syndata(params));
  }
  return instances;
}

}  // namespace dire
