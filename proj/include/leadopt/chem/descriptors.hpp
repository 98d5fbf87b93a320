//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "leadopt/chem/molgraph.hpp"

namespace leadopt::chem {

struct Descriptors {
  double molecular_weight = 0.0;  // Da, includes implicit hydrogens
  int hbd = 0;                    // N/O atoms bearing at least one H
  int hba = 0;                    // N/O atoms
  int ring_count = 0;
  int heavy_atom_count = 0;
};

Descriptors descriptors(const MolGraph& mol);

/// Rule-of-5 check. logP comes from ingested property data; it is never
/// computed here.
bool lipinski_pass(const MolGraph& mol, double logp);

}  // namespace leadopt::chem
