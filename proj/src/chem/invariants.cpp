//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/invariants.hpp"

#include <algorithm>
#include <unordered_set>

#include "leadopt/chem/molgraph.hpp"
#include "leadopt/util/hash.hpp"

namespace leadopt::chem {

using util::hash_combine;
using util::mix64;

std::vector<uint64_t> initial_invariants(const MolGraph& mol) {
  std::vector<uint64_t> inv(mol.atom_count());
  for (uint32_t i = 0; i < mol.atom_count(); ++i) {
    const Atom& a = mol.atoms()[i];
    uint64_t h = mix64(a.atomic_number);
    h = hash_combine(h, mol.degree(i));
    h = hash_combine(h, static_cast<uint64_t>(static_cast<int64_t>(a.charge) + 16));
    h = hash_combine(h, a.hydrogens);
    h = hash_combine(h, a.aromatic ? 1 : 0);
    h = hash_combine(h, a.in_ring ? 1 : 0);
    h = hash_combine(h, a.isotope);
    inv[i] = h;
  }
  return inv;
}

std::vector<uint64_t> refine_round(const MolGraph& mol,
                                   const std::vector<uint64_t>& inv) {
  std::vector<uint64_t> next(inv.size());
  std::vector<uint64_t> nbrs;
  for (uint32_t i = 0; i < mol.atom_count(); ++i) {
    nbrs.clear();
    for (const AdjEntry& e : mol.neighbors(i)) {
      uint64_t code = static_cast<uint64_t>(mol.bonds()[e.bond].order);
      nbrs.push_back(hash_combine(mix64(code), inv[e.neighbor]));
    }
    std::sort(nbrs.begin(), nbrs.end());
    uint64_t h = mix64(inv[i]);
    for (uint64_t n : nbrs) h = hash_combine(h, n);
    next[i] = h;
  }
  return next;
}

static size_t distinct_count(const std::vector<uint64_t>& inv) {
  std::unordered_set<uint64_t> s(inv.begin(), inv.end());
  return s.size();
}

std::vector<uint64_t> refined_invariants(const MolGraph& mol) {
  std::vector<uint64_t> inv = initial_invariants(mol);
  size_t classes = distinct_count(inv);
  for (size_t round = 0; round < mol.atom_count(); ++round) {
    std::vector<uint64_t> next = refine_round(mol, inv);
    size_t next_classes = distinct_count(next);
    inv = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return inv;
}

}  // namespace leadopt::chem
