//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <vector>

#include "leadopt/chem/molgraph.hpp"

namespace leadopt::chem {

/// Fixed-length binary fingerprint.
class Fingerprint {
 public:
  Fingerprint(uint32_t nbits, int radius);

  void set(uint64_t bit) { words_[(bit % nbits_) / 64] |= uint64_t{1} << (bit % nbits_ % 64); }
  bool test(uint32_t bit) const { return words_[bit / 64] >> (bit % 64) & 1; }

  uint32_t size() const { return nbits_; }
  int radius() const { return radius_; }
  int popcount() const;
  bool empty() const { return popcount() == 0; }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  uint32_t nbits_;
  int radius_;
  std::vector<uint64_t> words_;
};

/// One circular atom environment that survived deduplication.
struct MorganEnvironment {
  uint64_t id;      // stable hash of the environment's refined invariant
  uint32_t center;  // center atom index
  int radius;
};

/// Circular environments for r = 0..radius. Environments covering a bond set
/// already emitted (by a lower radius or by a lower-id environment at the
/// same radius) are dropped, so a fully-covered atom stops contributing once
/// its neighbourhood stops growing. Ids depend only on the isomorphism class
/// of the molecule.
std::vector<MorganEnvironment> morgan_environments(const MolGraph& mol, int radius);

/// Binary Morgan fingerprint: environment ids folded modulo nbits.
/// radius >= 0; nbits a power of two >= 64.
Fingerprint morgan_fingerprint(const MolGraph& mol, int radius = 2,
                               uint32_t nbits = 2048);

/// |a AND b| / |a OR b|. Both-empty pairs compare equal at 1.0.
/// Throws LengthMismatch when sizes differ.
double tanimoto(const Fingerprint& a, const Fingerprint& b);

}  // namespace leadopt::chem
