//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leadopt/chem/element.hpp"
#include "leadopt/errors.hpp"

namespace leadopt::chem {

enum class BondOrder : uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

/// Tetrahedral parity as written ("@" / "@@"). Kept as an annotation; it does
/// not participate in canonical output or fingerprints.
enum class Chirality : uint8_t { kNone, kAnticlockwise, kClockwise };

/// Double-bond geometry marker on a single bond ("/" / "\"). Annotation only.
enum class BondGeom : uint8_t { kNone, kUp, kDown };

struct Atom {
  uint8_t atomic_number = 0;
  int8_t charge = 0;
  uint8_t hydrogens = 0;  // resolved hydrogen count (implicit + bracket)
  bool aromatic = false;
  bool in_ring = false;
  uint16_t isotope = 0;  // 0 = unspecified
  Chirality chirality = Chirality::kNone;
  bool from_bracket = false;  // written as a bracket atom in the input
};

struct Bond {
  uint32_t a = 0;
  uint32_t b = 0;
  BondOrder order = BondOrder::kSingle;
  bool in_ring = false;
  BondGeom geom = BondGeom::kNone;

  uint32_t other(uint32_t atom) const { return atom == a ? b : a; }
};

struct AdjEntry {
  uint32_t neighbor;
  uint32_t bond;
};

/// Immutable molecular graph. Instances are produced by MolGraphBuilder
/// (usually via parse_smiles) with all invariants checked and ring membership
/// precomputed, so values are freely shareable across threads.
class MolGraph {
 public:
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  size_t atom_count() const { return atoms_.size(); }
  size_t bond_count() const { return bonds_.size(); }

  std::span<const AdjEntry> neighbors(uint32_t atom) const {
    return {adjacency_.data() + adj_start_[atom],
            adj_start_[atom + 1] - adj_start_[atom]};
  }
  size_t degree(uint32_t atom) const {
    return adj_start_[atom + 1] - adj_start_[atom];
  }

  /// Smallest set of smallest rings, each ring an atom-index cycle. The
  /// selection is made on isomorphism-invariant keys so derived counts do not
  /// depend on input atom order.
  const std::vector<std::vector<uint32_t>>& sssr() const { return sssr_; }

  /// Cyclomatic ring count (bonds - atoms + components).
  int ring_count() const { return static_cast<int>(sssr_.size()); }

  int heavy_atom_count() const;
  double molecular_weight() const;

  /// Bond order sum seen by valence logic: aromatic bonds count 1 and
  /// aromatic C/B atoms with no exocyclic multiple bond get +1 for the pi
  /// system. Used both by the parser and by the writer.
  int effective_bond_sum(uint32_t atom) const;

 private:
  friend class MolGraphBuilder;

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<AdjEntry> adjacency_;
  std::vector<uint32_t> adj_start_;
  std::vector<std::vector<uint32_t>> sssr_;
};

/// Assembles and validates MolGraphs. finalize() performs the invariant
/// checking described in the parser contract: endpoint validity, duplicate
/// bonds, implicit hydrogen resolution, valence limits, aromaticity
/// consistency, and ring perception.
class MolGraphBuilder {
 public:
  static constexpr uint8_t kImplicitH = 0xff;  // resolve at finalize

  MolGraphBuilder() = default;
  /// Start from an existing graph (used by the mutation test double).
  explicit MolGraphBuilder(const MolGraph& graph);

  uint32_t add_atom(Atom atom);
  void add_bond(uint32_t a, uint32_t b, BondOrder order,
                BondGeom geom = BondGeom::kNone);

  Atom& atom(uint32_t idx) { return atoms_[idx]; }
  size_t atom_count() const { return atoms_.size(); }

  /// Validates and returns the finished graph. Throws SyntaxError or
  /// ValenceError.
  MolGraph finalize() &&;

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
};

}  // namespace leadopt::chem
