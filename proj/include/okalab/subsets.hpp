#pragma once

#include <cstddef>
#include <vector>

namespace okalab {

using IndexSet = std::vector<std::size_t>;

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
/// Stops early and returns false as soon as fn returns false.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  IndexSet subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    if (!fn(static_cast<const IndexSet&>(subset))) return false;
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

/// True when `inner` (sorted) is a subset of `outer` (sorted).
inline bool is_subset_of(const IndexSet& inner, const IndexSet& outer) {
  std::size_t j = 0;
  for (std::size_t v : inner) {
    while (j < outer.size() && outer[j] < v) ++j;
    if (j == outer.size() || outer[j] != v) return false;
    ++j;
  }
  return true;
}

}  // namespace okalab
