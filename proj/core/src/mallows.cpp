#include "dire/mallows.hpp"

#include <cmath>

namespace dire {

namespace {

void check_params(double phi, std::span<const CandidateId> sigma) {
  if (!(phi > 0.0) || phi > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "phi must lie in (0, 1]");
  }
  std::vector<char> seen(sigma.size(), 0);
  for (CandidateId c : sigma) {
    if (c < 0 || static_cast<std::size_t>(c) >= sigma.size() || seen[static_cast<std::size_t>(c)]) {
      throw Error(ErrorCode::kInvalidArgument, "sigma is not a permutation");
    }
    seen[static_cast<std::size_t>(c)] = 1;
  }
}

}  // namespace

Ranking sample_mallows_ranking(double phi, std::span<const CandidateId> sigma, Rng& rng) {
  Ranking ranking;
  ranking.reserve(sigma.size());
  std::vector<double> weights;
  for (std::size_t j = 1; j <= sigma.size(); ++j) {
    weights.assign(j, 0.0);
    double total = 0.0;
    for (std::size_t i = 1; i <= j; ++i) {
      weights[i - 1] = std::pow(phi, static_cast<double>(j - i));
      total += weights[i - 1];
    }
    double draw = rng.uniform01() * total;
    std::size_t position = j;
    for (std::size_t i = 1; i <= j; ++i) {
      if (draw < weights[i - 1]) {
        position = i;
        break;
      }
      draw -= weights[i - 1];
    }
    ranking.insert(ranking.begin() + static_cast<std::ptrdiff_t>(position - 1), sigma[j - 1]);
  }
  return ranking;
}

PreferenceProfile sample_mallows(const MallowsParams& params, int n) {
  check_params(params.phi, params.sigma);
  if (params.sigma.empty()) throw Error(ErrorCode::kInvalidArgument, "sigma is empty");
  Rng rng(params.seed);
  std::vector<Ranking> rankings;
  rankings.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int v = 0; v < n; ++v) rankings.push_back(sample_mallows_ranking(params.phi, params.sigma, rng));
  return PreferenceProfile(static_cast<int>(params.sigma.size()), std::move(rankings));
}

std::int64_t kendall_tau(std::span<const CandidateId> a, std::span<const CandidateId> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "rankings differ in length");
  std::vector<std::size_t> where(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) where[static_cast<std::size_t>(b[i])] = i;
  std::int64_t discordant = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (where[static_cast<std::size_t>(a[i])] > where[static_cast<std::size_t>(a[j])]) ++discordant;
    }
  }
  return discordant;
}

}  // namespace dire
