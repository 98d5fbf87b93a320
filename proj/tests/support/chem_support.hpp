//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "leadopt/chem/molgraph.hpp"
#include "leadopt/chem/smiles.hpp"
#include "leadopt/util/rng.hpp"

namespace leadopt::test {

/// Rebuilds the graph with atoms in a different order. order[i] names the
/// old index placed at new index i.
inline chem::MolGraph reorder_atoms(const chem::MolGraph& mol,
                                    const std::vector<uint32_t>& order) {
  std::vector<uint32_t> new_index(mol.atom_count());
  for (uint32_t i = 0; i < order.size(); ++i) new_index[order[i]] = i;
  chem::MolGraphBuilder builder;
  for (uint32_t i = 0; i < order.size(); ++i) {
    chem::Atom atom = mol.atoms()[order[i]];
    atom.in_ring = false;  // recomputed at finalize
    builder.add_atom(atom);
  }
  for (const chem::Bond& b : mol.bonds()) {
    builder.add_bond(new_index[b.a], new_index[b.b], b.order, b.geom);
  }
  return std::move(builder).finalize();
}

inline chem::MolGraph random_permutation(const chem::MolGraph& mol,
                                         util::SplitMix64& rng) {
  std::vector<uint32_t> order(mol.atom_count());
  for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  util::shuffle(order, rng);
  return reorder_atoms(mol, order);
}

/// Well-known drug-like structures used across the chem tests.
inline const std::vector<std::string>& drug_smiles() {
  static const std::vector<std::string> mols = {
      "CC(=O)Oc1ccccc1C(=O)O",                     // aspirin
      "Cn1cnc2c1c(=O)n(C)c(=O)n2C",                // caffeine
      "CC(C)Cc1ccc(C(C)C(=O)O)cc1",                // ibuprofen
      "CC(=O)Nc1ccc(O)cc1",                        // paracetamol
      "CN1CCCC1c1cccnc1",                          // nicotine
      "COc1ccc2cc(C(C)C(=O)O)ccc2c1",              // naproxen
      "Cc1cc(NS(=O)(=O)c2ccc(N)cc2)no1",           // a sulfonamide
      "NC(=O)c1ccc(N2CCN(C)CC2)cc1",               // piperazine amide
      "O=C(Nc1ccc(Cl)cc1)C1CCCN1C",                // pyrrolidine amide
      "COc1cc2c(cc1OC)CCN(C)C2",                   // tetrahydroisoquinoline
      "Clc1ccc(-c2ccccc2)cc1",                     // chlorobiphenyl
      "OCC1OC(O)C(O)C(O)C1O",                      // a hexose (flat)
      "c1ccc2[nH]c3ccccc3c2c1",                    // carbazole
      "CC(C)NCC(O)COc1ccc(CC(N)=O)cc1",            // atenolol
      "CN(C)CCCN1c2ccccc2CCc2ccccc21",             // a tricyclic amine
  };
  return mols;
}

/// Resolves a path under the repository data directory (LEADOPT_DATA_DIR is
/// set by ctest; falls back to ../data relative to the working directory).
inline std::string data_path(const std::string& name) {
  const char* dir = std::getenv("LEADOPT_DATA_DIR");
  std::string base = dir != nullptr ? dir : "../data";
  return base + "/" + name;
}

inline std::vector<std::string> load_smiles_file(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace leadopt::test
