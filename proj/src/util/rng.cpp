//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/util/rng.hpp"

#include <algorithm>

namespace leadopt::util {

std::vector<size_t> sample_indices(size_t n, size_t k, SplitMix64& rng) {
  if (k >= n) {
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  // Partial Fisher-Yates over an index vector.
  std::vector<size_t> pool(n);
  for (size_t i = 0; i < n; ++i) pool[i] = i;
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + static_cast<size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<size_t> out(pool.begin(), pool.begin() + static_cast<long>(k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace leadopt::util
