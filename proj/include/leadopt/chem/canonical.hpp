//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leadopt/chem/molgraph.hpp"

namespace leadopt::chem {

/// A SMILES string in this library's canonical form: parse() of it succeeds
/// and canonicalizing the result reproduces the text byte-for-byte.
struct CanonicalSmiles {
  std::string text;

  friend auto operator<=>(const CanonicalSmiles&, const CanonicalSmiles&) = default;
};

/// Canonical atom ranks (a permutation of 0..n-1): iterative invariant
/// refinement with deterministic tie-breaking. For atoms related by a graph
/// automorphism any tie-break choice yields the same output string.
std::vector<uint32_t> canonical_ranks(const MolGraph& mol);

/// Serializes the graph in canonical order. The output is independent of the
/// input atom numbering and stable under re-parsing. Stereo annotations are
/// not emitted (canonical form is stereo-agnostic, matching fingerprints).
CanonicalSmiles canonicalize(const MolGraph& mol);

}  // namespace leadopt::chem
