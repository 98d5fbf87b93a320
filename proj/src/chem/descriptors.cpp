//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/descriptors.hpp"

namespace leadopt::chem {

Descriptors descriptors(const MolGraph& mol) {
  Descriptors d;
  d.molecular_weight = mol.molecular_weight();
  d.ring_count = mol.ring_count();
  d.heavy_atom_count = mol.heavy_atom_count();
  for (uint32_t i = 0; i < mol.atom_count(); ++i) {
    const Atom& a = mol.atoms()[i];
    if (a.atomic_number != kNitrogen && a.atomic_number != kOxygen) continue;
    ++d.hba;
    int hydrogens = a.hydrogens;
    for (const AdjEntry& e : mol.neighbors(i)) {
      if (mol.atoms()[e.neighbor].atomic_number == kHydrogen) ++hydrogens;
    }
    if (hydrogens > 0) ++d.hbd;
  }
  return d;
}

bool lipinski_pass(const MolGraph& mol, double logp) {
  Descriptors d = descriptors(mol);
  return d.molecular_weight <= 500.0 && logp <= 5.0 && d.hbd <= 5 && d.hba <= 10;
}

}  // namespace leadopt::chem
