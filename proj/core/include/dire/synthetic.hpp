#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dire/constraints.hpp"
#include "dire/random.hpp"

namespace dire {

struct PartitionResult {
  std::vector<std::vector<int>> groups;  // members sorted
  int requested_groups = 0;              // q as drawn
  bool clamped = false;                  // q exceeded the entity count
};

/// Splits `order` into contiguous runs. Each cut is a 1-based position in
/// [2, order.size()] where a new run starts.
std::vector<std::vector<int>> partition_at_cuts(std::span<const int> order,
                                                std::span<const int> cuts);

/// Draws q uniformly from [2, k], shuffles the entities, then cuts the
/// shuffled order at q - 1 distinct positions drawn from [2, entity_count].
PartitionResult partition_attribute(int entity_count, int k, Rng& rng);

/// Diversity bounds uniform in [1, min(k, |G|)], representation bounds
/// uniform in [1, k]. Attribute a always uses the same substream, so adding
/// attributes leaves earlier bounds unchanged.
struct SampledBounds {
  BoundTable diversity;
  BoundTable representation;
};
SampledBounds sample_constraints(const AttributeScheme& scheme, int k, std::uint64_t seed);

enum class SynKind { kSyn1, kSyn2 };

std::string_view to_string(SynKind kind);

struct SynDataParams {
  SynKind kind = SynKind::kSyn1;
  int mu = 0;
  int pi = 0;
  double phi = 0.5;  // syn1 always uses 0.5
  std::uint64_t seed = 0;
  int m = 50;
  int n = 100;
  int k = 6;
  Rule rule;
};

/// Mallows preferences around a random reference ranking, mu random
/// candidate partitions, pi random voter partitions and random bounds. syn2
/// fixes mu = pi = 2. Each component has its own random substream, so the
/// instance for (mu, pi) is the restriction of the one for larger values.
DiReInstance gen_syndata(const SynDataParams& params);

/// phi = 0.1, 0.2, ..., 1.0.
std::vector<double> syn2_phis();

/// One syn2 instance per phi step.
std::vector<DiReInstance> syn2_sweep(const SynDataParams& base);

}  // namespace dire
