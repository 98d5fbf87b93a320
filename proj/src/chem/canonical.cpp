//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/canonical.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "leadopt/chem/invariants.hpp"
#include "leadopt/util/hash.hpp"

namespace leadopt::chem {

namespace {

std::vector<uint64_t> refine_to_stable(const MolGraph& mol,
                                       std::vector<uint64_t> inv) {
  auto classes = [](const std::vector<uint64_t>& v) {
    std::unordered_set<uint64_t> s(v.begin(), v.end());
    return s.size();
  };
  size_t count = classes(inv);
  for (size_t round = 0; round < mol.atom_count(); ++round) {
    std::vector<uint64_t> next = refine_round(mol, inv);
    size_t next_count = classes(next);
    inv = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  return inv;
}

}  // namespace

std::vector<uint32_t> canonical_ranks(const MolGraph& mol) {
  std::vector<uint64_t> inv = refined_invariants(mol);

  // Break remaining ties one atom at a time: promote one member of the
  // smallest-valued ambiguous class and re-refine. Ties that survive full
  // refinement are automorphic in practice, so the choice of member does not
  // change the serialized result.
  for (;;) {
    std::map<uint64_t, std::vector<uint32_t>> classes;
    for (uint32_t i = 0; i < mol.atom_count(); ++i) classes[inv[i]].push_back(i);
    const std::vector<uint32_t>* tied = nullptr;
    for (const auto& [value, members] : classes) {
      if (members.size() > 1) {
        tied = &members;
        break;
      }
    }
    if (tied == nullptr) break;
    uint32_t chosen = (*tied)[0];
    inv[chosen] = util::hash_combine(inv[chosen], 0x7ea0c0ffee11d00dULL);
    inv = refine_to_stable(mol, std::move(inv));
  }

  std::vector<uint32_t> order(mol.atom_count());
  for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&inv](uint32_t a, uint32_t b) { return inv[a] < inv[b]; });
  std::vector<uint32_t> rank(mol.atom_count());
  for (uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

namespace {

class Writer {
 public:
  Writer(const MolGraph& mol, const std::vector<uint32_t>& rank)
      : mol_(mol), rank_(rank), visited_(mol.atom_count(), false) {}

  std::string run() {
    // One DFS per connected component; fragments sorted for determinism.
    std::vector<uint32_t> roots;
    std::vector<uint32_t> atoms_by_rank(mol_.atom_count());
    for (uint32_t i = 0; i < mol_.atom_count(); ++i) atoms_by_rank[rank_[i]] = i;

    std::vector<std::string> fragments;
    for (uint32_t atom : atoms_by_rank) {
      if (visited_[atom]) continue;
      collect_component(atom);
      fragments.push_back(emit_component(atom));
    }
    std::sort(fragments.begin(), fragments.end());
    std::string out;
    for (size_t i = 0; i < fragments.size(); ++i) {
      if (i > 0) out += '.';
      out += fragments[i];
    }
    return out;
  }

 private:
  struct Closure {
    uint32_t partner;
    uint32_t bond;
    int digit = -1;
  };

  // Pass 1: DFS assigning visit order, tree children, and ring closures.
  void collect_component(uint32_t root) {
    tree_children_.assign(mol_.atom_count(), {});
    openings_.assign(mol_.atom_count(), {});
    closings_.assign(mol_.atom_count(), {});
    std::vector<bool> bond_used(mol_.bond_count(), false);
    std::vector<uint32_t> stack{root};
    std::vector<bool> in_component(mol_.atom_count(), false);
    visited_[root] = true;
    in_component[root] = true;

    // Iterative DFS preserving child order (ranks ascending).
    struct Frame {
      uint32_t atom;
      std::vector<AdjEntry> nbrs;
      size_t next = 0;
    };
    std::vector<Frame> frames;
    auto make_frame = [this](uint32_t atom) {
      Frame f;
      f.atom = atom;
      f.nbrs.assign(mol_.neighbors(atom).begin(), mol_.neighbors(atom).end());
      std::sort(f.nbrs.begin(), f.nbrs.end(),
                [this](const AdjEntry& a, const AdjEntry& b) {
                  return rank_[a.neighbor] < rank_[b.neighbor];
                });
      return f;
    };
    frames.push_back(make_frame(root));
    visit_order_.assign(mol_.atom_count(), 0);
    uint32_t counter = 0;
    visit_order_[root] = counter++;

    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next >= f.nbrs.size()) {
        frames.pop_back();
        continue;
      }
      AdjEntry e = f.nbrs[f.next++];
      if (bond_used[e.bond]) continue;
      bond_used[e.bond] = true;
      if (!visited_[e.neighbor]) {
        visited_[e.neighbor] = true;
        in_component[e.neighbor] = true;
        visit_order_[e.neighbor] = counter++;
        tree_children_[f.atom].push_back(e);
        frames.push_back(make_frame(e.neighbor));
      } else {
        // Back edge: opens at the earlier-visited endpoint.
        uint32_t early = visit_order_[f.atom] < visit_order_[e.neighbor]
                             ? e.neighbor : f.atom;
        uint32_t late = early == f.atom ? e.neighbor : f.atom;
        openings_[early].push_back({late, e.bond, -1});
        closings_[late].push_back({early, e.bond, -1});
      }
    }

    // Digit assignment simulated in visit order: closings release digits
    // before openings claim new ones at the same atom.
    std::vector<uint32_t> by_visit;
    for (uint32_t i = 0; i < mol_.atom_count(); ++i) {
      if (in_component[i]) by_visit.push_back(i);
    }
    std::sort(by_visit.begin(), by_visit.end(),
              [this](uint32_t a, uint32_t b) {
                return visit_order_[a] < visit_order_[b];
              });
    std::vector<bool> digit_in_use(100, false);
    std::map<std::pair<uint32_t, uint32_t>, int> open_digit;  // (early, late)
    for (uint32_t atom : by_visit) {
      std::sort(closings_[atom].begin(), closings_[atom].end(),
                [this](const Closure& a, const Closure& b) {
                  return visit_order_[a.partner] < visit_order_[b.partner];
                });
      for (Closure& c : closings_[atom]) {
        c.digit = open_digit.at({c.partner, atom});
        digit_in_use[static_cast<size_t>(c.digit)] = false;
      }
      std::sort(openings_[atom].begin(), openings_[atom].end(),
                [this](const Closure& a, const Closure& b) {
                  return visit_order_[a.partner] < visit_order_[b.partner];
                });
      for (Closure& c : openings_[atom]) {
        int digit = 1;
        while (digit < 100 && digit_in_use[static_cast<size_t>(digit)]) ++digit;
        if (digit == 100) throw Error("out of ring closure digits");
        digit_in_use[static_cast<size_t>(digit)] = true;
        c.digit = digit;
        open_digit[{atom, c.partner}] = digit;
      }
    }
  }

  // Pass 2: emission.
  std::string emit_component(uint32_t root) {
    std::string out;
    emit_atom(root, out);
    return out;
  }

  void emit_atom(uint32_t atom, std::string& out) {
    out += atom_token(atom);
    for (const Closure& c : closings_[atom]) out += closure_token(c);
    for (const Closure& c : openings_[atom]) {
      out += bond_token(mol_.bonds()[c.bond]);
      out += closure_token(c);
    }
    const auto& children = tree_children_[atom];
    for (size_t i = 0; i < children.size(); ++i) {
      bool last = i + 1 == children.size();
      if (!last) out += '(';
      out += bond_token(mol_.bonds()[children[i].bond]);
      emit_atom(children[i].neighbor, out);
      if (!last) out += ')';
    }
  }

  static std::string closure_token(const Closure& c) {
    if (c.digit < 10) return std::string(1, static_cast<char>('0' + c.digit));
    return "%" + std::to_string(c.digit);
  }

  std::string bond_token(const Bond& b) const {
    const Atom& a1 = mol_.atoms()[b.a];
    const Atom& a2 = mol_.atoms()[b.b];
    switch (b.order) {
      case BondOrder::kSingle:
        // A single bond between two aromatic atoms must be explicit or the
        // reader would see an aromatic bond.
        return (a1.aromatic && a2.aromatic) ? "-" : "";
      case BondOrder::kDouble:
        return "=";
      case BondOrder::kTriple:
        return "#";
      case BondOrder::kAromatic:
        return "";  // implied between aromatic atoms
    }
    return "";
  }

  std::string atom_token(uint32_t idx) const {
    const Atom& a = mol_.atoms()[idx];
    const ElementInfo& info = element_info(a.atomic_number);
    std::string symbol = info.symbol;
    if (a.aromatic) {
      for (char& c : symbol) c = static_cast<char>(std::tolower(c));
    }

    bool bare_ok = info.organic_subset && a.charge == 0 && a.isotope == 0;
    if (bare_ok) {
      // The reader recomputes hydrogens for bare atoms; only write bare when
      // that recomputation reproduces the stored count.
      int recomputed = implicit_hydrogens_if_bare(idx);
      bare_ok = recomputed == static_cast<int>(a.hydrogens);
    }
    if (bare_ok) return symbol;

    std::string token = "[";
    if (a.isotope != 0) token += std::to_string(a.isotope);
    token += symbol;
    if (a.hydrogens == 1) {
      token += "H";
    } else if (a.hydrogens > 1) {
      token += "H" + std::to_string(a.hydrogens);
    }
    if (a.charge != 0) {
      token += a.charge > 0 ? '+' : '-';
      int magnitude = std::abs(a.charge);
      if (magnitude > 1) token += std::to_string(magnitude);
    }
    token += ']';
    return token;
  }

  // Mirrors the parser's implicit-hydrogen rules; -1 when no bare form exists.
  int implicit_hydrogens_if_bare(uint32_t idx) const {
    const Atom& a = mol_.atoms()[idx];
    int eff = mol_.effective_bond_sum(idx);
    if (a.aromatic) {
      switch (a.atomic_number) {
        case kCarbon: return eff > 4 ? -1 : 4 - eff;
        case kBoron: return std::max(0, 3 - eff);
        case kNitrogen:
        case kPhosphorus: return eff > 3 ? -1 : 0;
        case kOxygen:
        case kSulfur: return eff == 2 ? 0 : -1;
        default: return -1;
      }
    }
    for (int v : allowed_valences(a.atomic_number, 0)) {
      if (v >= eff) return v - eff;
    }
    return -1;
  }

  const MolGraph& mol_;
  const std::vector<uint32_t>& rank_;
  std::vector<bool> visited_;
  std::vector<uint32_t> visit_order_;
  std::vector<std::vector<AdjEntry>> tree_children_;
  std::vector<std::vector<Closure>> openings_;
  std::vector<std::vector<Closure>> closings_;
};

}  // namespace

CanonicalSmiles canonicalize(const MolGraph& mol) {
  std::vector<uint32_t> rank = canonical_ranks(mol);
  Writer writer(mol, rank);
  return CanonicalSmiles{writer.run()};
}

}  // namespace leadopt::chem
