//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "leadopt/util/hash.hpp"

namespace leadopt::util {

/// Deterministic generator used for every sampling decision in the pipeline.
/// std::shuffle / std::uniform_int_distribution are not portable across
/// standard libraries, so dataset builds use this instead. The algorithm name
/// is recorded in build manifests.
class SplitMix64 {
 public:
  static constexpr std::string_view kName = "splitmix64";

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). bound must be > 0.
  uint64_t below(uint64_t bound) {
    // Multiply-shift; bias is < bound / 2^64 which is irrelevant here.
    return static_cast<uint64_t>(
        (static_cast<__uint128_t>(next()) * bound) >> 64);
  }

  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Stable sub-stream derivation, e.g. per pipeline stage or per record.
  SplitMix64 fork(std::string_view label) const {
    return SplitMix64(hash_combine(state_, fnv1a(label)));
  }
  SplitMix64 fork(uint64_t label) const {
    return SplitMix64(hash_combine(state_, mix64(label)));
  }

 private:
  uint64_t state_;
};

template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

/// k distinct indices drawn from [0, n), returned in ascending order so
/// sampled subsets keep the original record order.
std::vector<size_t> sample_indices(size_t n, size_t k, SplitMix64& rng);

}  // namespace leadopt::util
