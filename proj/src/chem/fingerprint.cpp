//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

#include "leadopt/chem/invariants.hpp"

namespace leadopt::chem {

Fingerprint::Fingerprint(uint32_t nbits, int radius)
    : nbits_(nbits), radius_(radius), words_((nbits + 63) / 64, 0) {
  if (nbits < 64 || (nbits & (nbits - 1)) != 0) {
    throw Error("fingerprint size must be a power of two >= 64");
  }
}

int Fingerprint::popcount() const {
  int n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

namespace {

// Bonds within the radius-r ball around center: a bond belongs to the
// environment when at least one endpoint lies strictly inside the ball.
std::vector<uint32_t> environment_bonds(const MolGraph& mol, uint32_t center,
                                        int radius) {
  std::vector<int> dist(mol.atom_count(), -1);
  std::queue<uint32_t> queue;
  dist[center] = 0;
  queue.push(center);
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop();
    if (dist[v] >= radius) continue;
    for (const AdjEntry& e : mol.neighbors(v)) {
      if (dist[e.neighbor] < 0) {
        dist[e.neighbor] = dist[v] + 1;
        queue.push(e.neighbor);
      }
    }
  }
  std::vector<uint32_t> bonds;
  for (uint32_t bi = 0; bi < mol.bond_count(); ++bi) {
    const Bond& b = mol.bonds()[bi];
    int da = dist[b.a], db = dist[b.b];
    if (da < 0 || db < 0) continue;
    if ((da < radius && db <= radius) || (db < radius && da <= radius)) {
      bonds.push_back(bi);
    }
  }
  return bonds;
}

}  // namespace

std::vector<MorganEnvironment> morgan_environments(const MolGraph& mol,
                                                   int radius) {
  if (radius < 0) throw Error("negative fingerprint radius");

  std::vector<MorganEnvironment> out;
  std::vector<uint64_t> inv = initial_invariants(mol);

  // Radius 0: every atom contributes.
  for (uint32_t i = 0; i < mol.atom_count(); ++i) {
    out.push_back({inv[i], i, 0});
  }

  std::set<std::vector<uint32_t>> seen_bond_sets;
  std::vector<std::vector<uint32_t>> previous(mol.atom_count());

  for (int r = 1; r <= radius; ++r) {
    inv = refine_round(mol, inv);

    struct Candidate {
      uint64_t id;
      uint32_t atom;
      std::vector<uint32_t> bonds;
    };
    std::vector<Candidate> candidates;
    for (uint32_t i = 0; i < mol.atom_count(); ++i) {
      std::vector<uint32_t> bonds = environment_bonds(mol, i, r);
      if (bonds.empty() || bonds == previous[i]) continue;  // stopped growing
      candidates.push_back({inv[i], i, std::move(bonds)});
    }
    // Lower ids win when two environments cover the same bonds, which keeps
    // the surviving id independent of atom numbering.
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.id != b.id) return a.id < b.id;
                return a.bonds < b.bonds;
              });
    for (Candidate& c : candidates) {
      previous[c.atom] = c.bonds;
      if (!seen_bond_sets.insert(c.bonds).second) continue;
      out.push_back({c.id, c.atom, r});
    }
  }
  return out;
}

Fingerprint morgan_fingerprint(const MolGraph& mol, int radius, uint32_t nbits) {
  Fingerprint fp(nbits, radius);
  for (const MorganEnvironment& env : morgan_environments(mol, radius)) {
    fp.set(env.id);
  }
  return fp;
}

double tanimoto(const Fingerprint& a, const Fingerprint& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("fingerprints of " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + " bits");
  }
  int intersection = 0, unions = 0;
  for (size_t i = 0; i < a.words().size(); ++i) {
    intersection += std::popcount(a.words()[i] & b.words()[i]);
    unions += std::popcount(a.words()[i] | b.words()[i]);
  }
  if (unions == 0) return 1.0;  // both empty; defined for totality
  return static_cast<double>(intersection) / static_cast<double>(unions);
}

}  // namespace leadopt::chem
