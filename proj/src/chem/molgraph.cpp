//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/molgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "leadopt/chem/invariants.hpp"

namespace leadopt::chem {

namespace {

struct AdjacencyView {
  std::vector<std::vector<AdjEntry>> lists;

  explicit AdjacencyView(size_t atom_count, const std::vector<Bond>& bonds)
      : lists(atom_count) {
    for (uint32_t bi = 0; bi < bonds.size(); ++bi) {
      lists[bonds[bi].a].push_back({bonds[bi].b, bi});
      lists[bonds[bi].b].push_back({bonds[bi].a, bi});
    }
  }
};

// A bond lies on a cycle iff it is not a bridge.
std::vector<bool> find_cycle_bonds(size_t atom_count,
                                   const std::vector<Bond>& bonds,
                                   const AdjacencyView& adj) {
  std::vector<bool> in_cycle(bonds.size(), false);
  std::vector<int> disc(atom_count, -1);
  std::vector<int> low(atom_count, 0);
  int timer = 0;

  std::function<void(uint32_t, int)> dfs = [&](uint32_t v, int parent_bond) {
    disc[v] = low[v] = timer++;
    for (const AdjEntry& e : adj.lists[v]) {
      if (static_cast<int>(e.bond) == parent_bond) continue;
      if (disc[e.neighbor] < 0) {
        dfs(e.neighbor, static_cast<int>(e.bond));
        low[v] = std::min(low[v], low[e.neighbor]);
        if (low[e.neighbor] <= disc[v]) in_cycle[e.bond] = true;
      } else {
        low[v] = std::min(low[v], disc[e.neighbor]);
        if (disc[e.neighbor] < disc[v]) in_cycle[e.bond] = true;
      }
    }
  };
  for (uint32_t v = 0; v < atom_count; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  return in_cycle;
}

// Shortest cycle through bond (a, b): BFS from a to b with that bond removed.
std::vector<uint32_t> shortest_cycle_through(const AdjacencyView& adj,
                                             uint32_t bond_index,
                                             uint32_t a, uint32_t b,
                                             size_t atom_count) {
  std::vector<int> prev(atom_count, -1);
  std::vector<bool> seen(atom_count, false);
  std::queue<uint32_t> queue;
  queue.push(a);
  seen[a] = true;
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop();
    if (v == b) break;
    for (const AdjEntry& e : adj.lists[v]) {
      if (e.bond == bond_index || seen[e.neighbor]) continue;
      seen[e.neighbor] = true;
      prev[e.neighbor] = static_cast<int>(v);
      queue.push(e.neighbor);
    }
  }
  if (!seen[b]) return {};
  std::vector<uint32_t> path;
  for (int v = static_cast<int>(b); v != -1; v = prev[v]) {
    path.push_back(static_cast<uint32_t>(v));
  }
  return path;  // a .. b as a cycle (closed by the removed bond)
}

using BondSet = std::vector<uint64_t>;

BondSet ring_bond_set(const std::vector<uint32_t>& ring_atoms,
                      const AdjacencyView& adj, size_t bond_count) {
  BondSet set((bond_count + 63) / 64, 0);
  for (size_t i = 0; i < ring_atoms.size(); ++i) {
    uint32_t u = ring_atoms[i];
    uint32_t v = ring_atoms[(i + 1) % ring_atoms.size()];
    for (const AdjEntry& e : adj.lists[u]) {
      if (e.neighbor == v) {
        set[e.bond / 64] |= uint64_t{1} << (e.bond % 64);
        break;
      }
    }
  }
  return set;
}

bool is_zero(const BondSet& s) {
  for (uint64_t w : s) {
    if (w != 0) return false;
  }
  return true;
}

void xor_into(BondSet& dst, const BondSet& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

int lowest_set_bit(const BondSet& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0) return static_cast<int>(i * 64 + __builtin_ctzll(s[i]));
  }
  return -1;
}

}  // namespace

int MolGraph::heavy_atom_count() const {
  int n = 0;
  for (const Atom& a : atoms_) {
    if (a.atomic_number != kHydrogen) ++n;
  }
  return n;
}

double MolGraph::molecular_weight() const {
  double mw = 0.0;
  for (const Atom& a : atoms_) {
    mw += a.isotope != 0 ? static_cast<double>(a.isotope)
                         : element_info(a.atomic_number).weight;
    mw += a.hydrogens * element_info(kHydrogen).weight;
  }
  return mw;
}

int MolGraph::effective_bond_sum(uint32_t atom) const {
  int sum = 0;
  bool exocyclic_multiple = false;
  for (const AdjEntry& e : neighbors(atom)) {
    const Bond& b = bonds_[e.bond];
    if (b.order == BondOrder::kAromatic) {
      sum += 1;
    } else {
      sum += static_cast<int>(b.order);
      if (b.order != BondOrder::kSingle) exocyclic_multiple = true;
    }
  }
  const Atom& a = atoms_[atom];
  if (a.aromatic && !exocyclic_multiple &&
      (a.atomic_number == kCarbon || a.atomic_number == kBoron)) {
    sum += 1;  // pi contribution of the aromatic system
  }
  return sum;
}

MolGraphBuilder::MolGraphBuilder(const MolGraph& graph)
    : atoms_(graph.atoms()), bonds_(graph.bonds()) {}

uint32_t MolGraphBuilder::add_atom(Atom atom) {
  atoms_.push_back(atom);
  return static_cast<uint32_t>(atoms_.size() - 1);
}

void MolGraphBuilder::add_bond(uint32_t a, uint32_t b, BondOrder order,
                               BondGeom geom) {
  Bond bond;
  bond.a = a;
  bond.b = b;
  bond.order = order;
  bond.geom = geom;
  bonds_.push_back(bond);
}

MolGraph MolGraphBuilder::finalize() && {
  MolGraph mol;
  mol.atoms_ = std::move(atoms_);
  mol.bonds_ = std::move(bonds_);

  const size_t n = mol.atoms_.size();
  if (n == 0) throw SyntaxError("no atoms");

  std::set<std::pair<uint32_t, uint32_t>> seen_bonds;
  for (const Bond& b : mol.bonds_) {
    if (b.a >= n || b.b >= n) throw SyntaxError("bond references missing atom");
    if (b.a == b.b) throw SyntaxError("bond joins an atom to itself");
    auto key = std::minmax(b.a, b.b);
    if (!seen_bonds.insert({key.first, key.second}).second) {
      throw SyntaxError("duplicate bond between atoms");
    }
  }

  AdjacencyView adj(n, mol.bonds_);
  std::vector<bool> cycle_bond = find_cycle_bonds(n, mol.bonds_, adj);

  // An unmarked bond between two aromatic atoms is read as aromatic; when it
  // is not part of any ring (biphenyl-style links) it is really a single bond.
  for (uint32_t bi = 0; bi < mol.bonds_.size(); ++bi) {
    Bond& b = mol.bonds_[bi];
    b.in_ring = cycle_bond[bi];
    if (b.order == BondOrder::kAromatic && !b.in_ring) {
      b.order = BondOrder::kSingle;
    }
  }
  for (uint32_t bi = 0; bi < mol.bonds_.size(); ++bi) {
    const Bond& b = mol.bonds_[bi];
    if (b.in_ring) {
      mol.atoms_[b.a].in_ring = true;
      mol.atoms_[b.b].in_ring = true;
    }
  }

  // Aromatic bonds must join aromatic atoms.
  for (const Bond& b : mol.bonds_) {
    if (b.order == BondOrder::kAromatic &&
        (!mol.atoms_[b.a].aromatic || !mol.atoms_[b.b].aromatic)) {
      throw SyntaxError("aromatic bond joins non-aromatic atom");
    }
  }

  // Flat adjacency for the finished graph.
  mol.adj_start_.assign(n + 1, 0);
  for (const Bond& b : mol.bonds_) {
    ++mol.adj_start_[b.a + 1];
    ++mol.adj_start_[b.b + 1];
  }
  for (size_t i = 0; i < n; ++i) mol.adj_start_[i + 1] += mol.adj_start_[i];
  mol.adjacency_.resize(mol.bonds_.size() * 2);
  {
    std::vector<uint32_t> fill(mol.adj_start_.begin(), mol.adj_start_.end() - 1);
    for (uint32_t bi = 0; bi < mol.bonds_.size(); ++bi) {
      const Bond& b = mol.bonds_[bi];
      mol.adjacency_[fill[b.a]++] = {b.b, bi};
      mol.adjacency_[fill[b.b]++] = {b.a, bi};
    }
  }

  // Resolve implicit hydrogens and check valences.
  for (uint32_t ai = 0; ai < n; ++ai) {
    Atom& a = mol.atoms_[ai];
    const std::string symbol = element_info(a.atomic_number).symbol;
    int eff = mol.effective_bond_sum(ai);

    if (a.aromatic) {
      int aromatic_bonds = 0;
      for (const AdjEntry& e : mol.neighbors(ai)) {
        if (mol.bonds_[e.bond].order == BondOrder::kAromatic) ++aromatic_bonds;
      }
      if (aromatic_bonds < 2) {
        throw SyntaxError("aromatic atom " + symbol + " outside an aromatic ring");
      }
    }

    if (a.hydrogens == kImplicitH) {
      // Only bare organic-subset atoms carry the marker.
      if (a.aromatic) {
        switch (a.atomic_number) {
          case kCarbon:
            if (eff > 4) throw ValenceError("aromatic C with bond sum " + std::to_string(eff));
            a.hydrogens = static_cast<uint8_t>(4 - eff);
            break;
          case kBoron:
            a.hydrogens = static_cast<uint8_t>(std::max(0, 3 - eff));
            break;
          case kNitrogen:
          case kPhosphorus:
            if (eff > 3) throw ValenceError("aromatic " + symbol + " with bond sum " + std::to_string(eff));
            a.hydrogens = 0;
            break;
          case kOxygen:
          case kSulfur:
            if (eff != 2) throw ValenceError("aromatic " + symbol + " with bond sum " + std::to_string(eff));
            a.hydrogens = 0;
            break;
          default:
            throw SyntaxError(std::string("element ") + symbol + " cannot be aromatic");
        }
      } else {
        std::vector<int> allowed = allowed_valences(a.atomic_number, a.charge);
        int h = -1;
        for (int v : allowed) {
          if (v >= eff) {
            h = v - eff;
            break;
          }
        }
        if (h < 0) {
          throw ValenceError(symbol + " with bond order sum " + std::to_string(eff));
        }
        a.hydrogens = static_cast<uint8_t>(h);
      }
    } else {
      // Bracket atoms: hydrogens are as written. Reject only totals that
      // exceed the element's maximum (sub-valent radicals are legal).
      std::vector<int> allowed = allowed_valences(a.atomic_number, a.charge);
      if (!allowed.empty()) {
        int total = eff + a.hydrogens;
        if (total > *std::max_element(allowed.begin(), allowed.end())) {
          throw ValenceError(symbol + (a.charge != 0 ? " (charged)" : "") +
                             " with total valence " + std::to_string(total));
        }
      }
    }
  }

  // SSSR: shortest cycle through every ring bond as candidates, completed by
  // fundamental cycles, picked greedily by (size, invariant key) under GF(2)
  // independence. The invariant key keeps the choice stable across atom
  // numberings.
  int cyclomatic;
  {
    int components = 0;
    std::vector<bool> visited(n, false);
    for (uint32_t v = 0; v < n; ++v) {
      if (visited[v]) continue;
      ++components;
      std::queue<uint32_t> queue;
      queue.push(v);
      visited[v] = true;
      while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop();
        for (const AdjEntry& e : mol.neighbors(u)) {
          if (!visited[e.neighbor]) {
            visited[e.neighbor] = true;
            queue.push(e.neighbor);
          }
        }
      }
    }
    cyclomatic = static_cast<int>(mol.bonds_.size()) - static_cast<int>(n) + components;
  }

  if (cyclomatic > 0) {
    AdjacencyView final_adj(n, mol.bonds_);
    std::vector<uint64_t> inv = refined_invariants(mol);

    struct Candidate {
      std::vector<uint32_t> atoms;
      BondSet bonds;
      std::vector<uint64_t> key;
    };
    std::vector<Candidate> candidates;
    std::set<BondSet> seen_sets;

    auto add_candidate = [&](std::vector<uint32_t> ring) {
      if (ring.size() < 3) return;
      BondSet set = ring_bond_set(ring, final_adj, mol.bonds_.size());
      if (!seen_sets.insert(set).second) return;
      std::vector<uint64_t> key(ring.size());
      for (size_t i = 0; i < ring.size(); ++i) key[i] = inv[ring[i]];
      std::sort(key.begin(), key.end());
      candidates.push_back({std::move(ring), std::move(set), std::move(key)});
    };

    for (uint32_t bi = 0; bi < mol.bonds_.size(); ++bi) {
      if (!cycle_bond[bi]) continue;
      add_candidate(shortest_cycle_through(final_adj, bi, mol.bonds_[bi].a,
                                           mol.bonds_[bi].b, n));
    }
    // Fundamental cycles guarantee the basis can be completed.
    {
      std::vector<int> parent(n, -1), parent_bond(n, -1), depth(n, 0);
      std::vector<bool> visited(n, false);
      std::vector<uint32_t> back_edges;
      for (uint32_t root = 0; root < n; ++root) {
        if (visited[root]) continue;
        std::queue<uint32_t> queue;
        queue.push(root);
        visited[root] = true;
        while (!queue.empty()) {
          uint32_t u = queue.front();
          queue.pop();
          for (const AdjEntry& e : final_adj.lists[u]) {
            if (!visited[e.neighbor]) {
              visited[e.neighbor] = true;
              parent[e.neighbor] = static_cast<int>(u);
              parent_bond[e.neighbor] = static_cast<int>(e.bond);
              depth[e.neighbor] = depth[u] + 1;
              queue.push(e.neighbor);
            } else if (static_cast<int>(e.bond) != parent_bond[u] &&
                       u < e.neighbor) {
              back_edges.push_back(e.bond);
            }
          }
        }
      }
      for (uint32_t bi : back_edges) {
        uint32_t u = mol.bonds_[bi].a, v = mol.bonds_[bi].b;
        std::vector<uint32_t> left{u}, right{v};
        uint32_t x = u, y = v;
        while (depth[x] > depth[y]) { x = static_cast<uint32_t>(parent[x]); left.push_back(x); }
        while (depth[y] > depth[x]) { y = static_cast<uint32_t>(parent[y]); right.push_back(y); }
        while (x != y) {
          x = static_cast<uint32_t>(parent[x]); left.push_back(x);
          y = static_cast<uint32_t>(parent[y]); right.push_back(y);
        }
        // left ends at the common ancestor; append right reversed, dropping
        // its duplicate ancestor entry.
        std::vector<uint32_t> ring(left.begin(), left.end());
        for (auto it = right.rbegin() + 1; it != right.rend(); ++it) {
          ring.push_back(*it);
        }
        add_candidate(std::move(ring));
      }
    }

    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.atoms.size() != b.atoms.size()) {
                  return a.atoms.size() < b.atoms.size();
                }
                return a.key < b.key;
              });

    std::vector<BondSet> basis;  // reduced echelon rows
    std::vector<int> pivots;
    for (const Candidate& cand : candidates) {
      if (static_cast<int>(mol.sssr_.size()) >= cyclomatic) break;
      BondSet reduced = cand.bonds;
      for (size_t i = 0; i < basis.size(); ++i) {
        if (reduced[pivots[i] / 64] >> (pivots[i] % 64) & 1) {
          xor_into(reduced, basis[i]);
        }
      }
      if (is_zero(reduced)) continue;
      pivots.push_back(lowest_set_bit(reduced));
      basis.push_back(std::move(reduced));
      mol.sssr_.push_back(cand.atoms);
    }
  }

  return mol;
}

}  // namespace leadopt::chem
