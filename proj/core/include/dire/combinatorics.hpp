#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace dire {

/// Binomial coefficient C(n, r), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // result * (n - r + i) / i stays integral at every step.
    const std::uint64_t factor = n - r + i;
    if (result > kMax / factor) return kMax;
    result = result * factor / i;
  }
  return result;
}

/// Saturating product.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

/// Visits every r-subset of `items` in lexicographic index order. The
/// visitor receives the chosen items and returns false to stop early.
/// Returns false iff the visitor stopped the enumeration.
template <typename T, typename Visitor>
bool for_each_combination(std::span<const T> items, std::size_t r, Visitor&& visit) {
  const std::size_t n = items.size();
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<T> chosen(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) chosen[i] = items[idx[i]];
    if (!visit(std::span<const T>(chosen))) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace dire
