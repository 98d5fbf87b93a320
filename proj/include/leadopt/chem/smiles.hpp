//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string_view>

#include "leadopt/chem/molgraph.hpp"

namespace leadopt::chem {

/// Parses a SMILES string into a validated MolGraph.
///
/// Supported dialect: organic subset atoms (B C N O P S F Cl Br I) and their
/// aromatic lowercase forms, bracket atoms with isotope / chirality /
/// hydrogen count / charge, ring closures including %nn, branches, dots for
/// disconnected fragments, and bond symbols - = # : / \. Stereo markers are
/// retained as annotations only. Atom class labels (:n) are parsed and
/// discarded.
///
/// Throws SyntaxError for malformed input and ValenceError when an atom
/// exceeds its allowed valence.
MolGraph parse_smiles(std::string_view text);

}  // namespace leadopt::chem
