//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>

#include "leadopt/chem/molgraph.hpp"

namespace leadopt::chem {

/// Contribution scores for hashed radius-2 circular fragments, loaded from a
/// tab-separated file. Fragments absent from the table contribute the
/// declared default. An entirely empty table (no entries, no declared
/// default) degrades the score to its complexity terms by pinning every
/// fragment at the top of the calibration range, so a minimal molecule lands
/// at the lower clamp; reports mark such scores as approximate.
class FragmentScoreTable {
 public:
  FragmentScoreTable() = default;

  /// File format: one `<id>\t<score>` per line. Lines starting with '#' are
  /// comments; an optional `#default <score>` line declares the default
  /// contribution.
  static FragmentScoreTable load(std::istream& in, std::string provenance);
  static FragmentScoreTable load_file(const std::string& path);

  void add(uint64_t fragment_id, double score);
  void set_default(double score);

  double contribution(uint64_t fragment_id) const;
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::string& provenance() const { return provenance_; }

  void save(std::ostream& out) const;

 private:
  std::unordered_map<uint64_t, double> entries_;
  double default_score_ = 0.0;
  bool default_declared_ = false;
  std::string provenance_ = "empty";

  friend double sa_score(const MolGraph&, const FragmentScoreTable&);
};

/// Complexity features entering the score; exposed for tests.
struct SaComplexity {
  int heavy_atoms = 0;
  int stereo_centers = 0;  // atoms carrying a chirality annotation
  int spiro_atoms = 0;
  int bridgehead_atoms = 0;
  int macrocycles = 0;  // SSSR rings larger than 8 atoms
  double penalty() const;
};

SaComplexity sa_complexity(const MolGraph& mol);

/// Synthetic accessibility score in [1, 10]; 1 is easy to make.
/// Mean fragment contribution minus complexity penalties plus a symmetry
/// correction, affinely mapped onto the [1, 10] scale with a logarithmic
/// taper above 8.
double sa_score(const MolGraph& mol, const FragmentScoreTable& table);

}  // namespace leadopt::chem
