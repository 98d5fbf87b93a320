//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/sa_score.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "leadopt/chem/fingerprint.hpp"

namespace leadopt::chem {

namespace {

// Calibration of the raw score onto [1, 10].
constexpr double kRawMin = -4.0;
constexpr double kRawMax = 2.5;

}  // namespace

FragmentScoreTable FragmentScoreTable::load(std::istream& in,
                                            std::string provenance) {
  FragmentScoreTable table;
  table.provenance_ = std::move(provenance);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream header(line.substr(1));
      std::string word;
      header >> word;
      if (word == "default") {
        double score;
        if (!(header >> score)) {
          throw IngestError("fragment table line " + std::to_string(line_no) +
                            ": bad #default");
        }
        table.set_default(score);
      }
      continue;
    }
    std::istringstream row(line);
    uint64_t id;
    double score;
    if (!(row >> id >> score)) {
      throw IngestError("fragment table line " + std::to_string(line_no) +
                        ": expected <id>\\t<score>");
    }
    table.add(id, score);
  }
  return table;
}

FragmentScoreTable FragmentScoreTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open fragment table: " + path);
  return load(in, path);
}

void FragmentScoreTable::add(uint64_t fragment_id, double score) {
  if (!std::isfinite(score)) throw IngestError("non-finite fragment score");
  entries_[fragment_id] = score;
}

void FragmentScoreTable::set_default(double score) {
  if (!std::isfinite(score)) throw IngestError("non-finite default score");
  default_score_ = score;
  default_declared_ = true;
}

double FragmentScoreTable::contribution(uint64_t fragment_id) const {
  auto it = entries_.find(fragment_id);
  if (it != entries_.end()) return it->second;
  if (default_declared_) return default_score_;
  // Empty undeclared table: every fragment sits at the calibration maximum,
  // leaving only the complexity terms to move the score.
  return entries_.empty() ? kRawMax : 0.0;
}

void FragmentScoreTable::save(std::ostream& out) const {
  if (default_declared_) out << "#default " << default_score_ << "\n";
  std::vector<std::pair<uint64_t, double>> sorted(entries_.begin(), entries_.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [id, score] : sorted) {
    out << id << '\t' << score << '\n';
  }
}

double SaComplexity::penalty() const {
  double size_penalty = std::pow(heavy_atoms, 1.005) - heavy_atoms;
  double stereo_penalty = std::log10(stereo_centers + 1.0);
  double spiro_penalty = std::log10(spiro_atoms + 1.0);
  double bridge_penalty = std::log10(bridgehead_atoms + 1.0);
  double macro_penalty = macrocycles > 0 ? std::log10(2.0) : 0.0;
  return size_penalty + stereo_penalty + spiro_penalty + bridge_penalty +
         macro_penalty;
}

SaComplexity sa_complexity(const MolGraph& mol) {
  SaComplexity c;
  c.heavy_atoms = mol.heavy_atom_count();
  for (const Atom& a : mol.atoms()) {
    if (a.chirality != Chirality::kNone) ++c.stereo_centers;
  }

  const auto& rings = mol.sssr();
  for (const auto& ring : rings) {
    if (ring.size() > 8) ++c.macrocycles;
  }

  std::vector<std::set<uint32_t>> ring_atoms;
  std::vector<std::set<std::pair<uint32_t, uint32_t>>> ring_bonds;
  ring_atoms.reserve(rings.size());
  for (const auto& ring : rings) {
    ring_atoms.emplace_back(ring.begin(), ring.end());
    std::set<std::pair<uint32_t, uint32_t>> bonds;
    for (size_t i = 0; i < ring.size(); ++i) {
      uint32_t u = ring[i], v = ring[(i + 1) % ring.size()];
      bonds.insert({std::min(u, v), std::max(u, v)});
    }
    ring_bonds.push_back(std::move(bonds));
  }

  std::set<uint32_t> spiro, bridge;
  for (size_t i = 0; i < rings.size(); ++i) {
    for (size_t j = i + 1; j < rings.size(); ++j) {
      std::vector<uint32_t> shared_atoms;
      std::set_intersection(ring_atoms[i].begin(), ring_atoms[i].end(),
                            ring_atoms[j].begin(), ring_atoms[j].end(),
                            std::back_inserter(shared_atoms));
      if (shared_atoms.empty()) continue;
      std::vector<std::pair<uint32_t, uint32_t>> shared_bonds;
      std::set_intersection(ring_bonds[i].begin(), ring_bonds[i].end(),
                            ring_bonds[j].begin(), ring_bonds[j].end(),
                            std::back_inserter(shared_bonds));
      if (shared_atoms.size() == 1 && shared_bonds.empty()) {
        spiro.insert(shared_atoms[0]);
      } else if (shared_bonds.size() >= 2) {
        // Bridged pair: the bridgeheads are the ends of the shared path.
        std::unordered_map<uint32_t, int> degree;
        for (const auto& [u, v] : shared_bonds) {
          ++degree[u];
          ++degree[v];
        }
        for (const auto& [atom, deg] : degree) {
          if (deg == 1) bridge.insert(atom);
        }
      }
    }
  }
  c.spiro_atoms = static_cast<int>(spiro.size());
  c.bridgehead_atoms = static_cast<int>(bridge.size());
  return c;
}

double sa_score(const MolGraph& mol, const FragmentScoreTable& table) {
  std::vector<MorganEnvironment> envs = morgan_environments(mol, 2);

  double fragment_sum = 0.0;
  std::set<uint64_t> distinct;
  for (const MorganEnvironment& env : envs) {
    fragment_sum += table.contribution(env.id);
    distinct.insert(env.id);
  }
  double fragment_mean = fragment_sum / static_cast<double>(envs.size());

  SaComplexity complexity = sa_complexity(mol);

  // Symmetry correction: molecules with few distinct environments relative
  // to their size are easier to make than the size penalty suggests.
  double symmetry = 0.0;
  if (complexity.heavy_atoms > static_cast<int>(distinct.size())) {
    symmetry = 0.5 * std::log(static_cast<double>(complexity.heavy_atoms) /
                              static_cast<double>(distinct.size()));
  }

  double raw = fragment_mean - complexity.penalty() + symmetry;

  double score = 11.0 - (raw - kRawMin + 1.0) / (kRawMax - kRawMin) * 9.0;
  if (score > 8.0) score = 8.0 + std::log(score - 8.0);
  return std::clamp(score, 1.0, 10.0);
}

}  // namespace leadopt::chem
