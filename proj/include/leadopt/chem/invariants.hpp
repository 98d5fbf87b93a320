//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <vector>

namespace leadopt::chem {

class MolGraph;

/// Initial per-atom invariant: a stable hash of (element, heavy degree,
/// charge, hydrogen count, aromatic flag, ring flag, isotope). Independent of
/// atom numbering by construction.
std::vector<uint64_t> initial_invariants(const MolGraph& mol);

/// One Morgan-style refinement round: each atom's invariant is combined with
/// the sorted (bond order, neighbor invariant) multiset.
std::vector<uint64_t> refine_round(const MolGraph& mol,
                                   const std::vector<uint64_t>& inv);

/// Refines until the partition stops splitting (bounded by atom count).
std::vector<uint64_t> refined_invariants(const MolGraph& mol);

}  // namespace leadopt::chem
