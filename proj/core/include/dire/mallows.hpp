#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dire/election.hpp"
#include "dire/random.hpp"

namespace dire {

struct MallowsParams {
  double phi = 0.5;            // dispersion in (0, 1]
  Ranking sigma;               // reference ranking
  std::uint64_t seed = 0;
};

/// One ranking by repeated insertion: the j-th item of sigma goes to
/// position i (1-based, i <= j) with weight phi^(j - i).
Ranking sample_mallows_ranking(double phi, std::span<const CandidateId> sigma, Rng& rng);

/// n independent Mallows rankings. Throws kInvalidArgument on a bad phi or
/// a sigma that is not a permutation.
PreferenceProfile sample_mallows(const MallowsParams& params, int n);

/// Number of candidate pairs the two rankings order differently.
std::int64_t kendall_tau(std::span<const CandidateId> a, std::span<const CandidateId> b);

}  // namespace dire
