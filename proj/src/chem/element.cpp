//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/element.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <unordered_map>

namespace leadopt::chem {

namespace {

// Standard atomic weights (abridged CIAAW values). Covers the elements that
// occur in drug-like SMILES plus common counter-ions; anything else is
// rejected at parse time as an unknown element.
constexpr std::array<ElementInfo, 60> kElements = {{
    {1, "H", 1.008, false, false},    {2, "He", 4.003, false, false},
    {3, "Li", 6.94, false, false},    {4, "Be", 9.012, false, false},
    {5, "B", 10.81, true, true},      {6, "C", 12.011, true, true},
    {7, "N", 14.007, true, true},     {8, "O", 15.999, true, true},
    {9, "F", 18.998, true, false},    {10, "Ne", 20.180, false, false},
    {11, "Na", 22.990, false, false}, {12, "Mg", 24.305, false, false},
    {13, "Al", 26.982, false, false}, {14, "Si", 28.085, false, false},
    {15, "P", 30.974, true, true},    {16, "S", 32.06, true, true},
    {17, "Cl", 35.45, true, false},   {18, "Ar", 39.948, false, false},
    {19, "K", 39.098, false, false},  {20, "Ca", 40.078, false, false},
    {22, "Ti", 47.867, false, false}, {23, "V", 50.942, false, false},
    {24, "Cr", 51.996, false, false}, {25, "Mn", 54.938, false, false},
    {26, "Fe", 55.845, false, false}, {27, "Co", 58.933, false, false},
    {28, "Ni", 58.693, false, false}, {29, "Cu", 63.546, false, false},
    {30, "Zn", 65.38, false, false},  {31, "Ga", 69.723, false, false},
    {32, "Ge", 72.630, false, false}, {33, "As", 74.922, false, true},
    {34, "Se", 78.971, false, true},  {35, "Br", 79.904, true, false},
    {36, "Kr", 83.798, false, false}, {37, "Rb", 85.468, false, false},
    {38, "Sr", 87.62, false, false},  {40, "Zr", 91.224, false, false},
    {42, "Mo", 95.95, false, false},  {44, "Ru", 101.07, false, false},
    {45, "Rh", 102.906, false, false},{46, "Pd", 106.42, false, false},
    {47, "Ag", 107.868, false, false},{48, "Cd", 112.414, false, false},
    {49, "In", 114.818, false, false},{50, "Sn", 118.710, false, false},
    {51, "Sb", 121.760, false, false},{52, "Te", 127.60, false, true},
    {53, "I", 126.904, true, false},  {54, "Xe", 131.293, false, false},
    {55, "Cs", 132.905, false, false},{56, "Ba", 137.327, false, false},
    {74, "W", 183.84, false, false},  {78, "Pt", 195.084, false, false},
    {79, "Au", 196.967, false, false},{80, "Hg", 200.592, false, false},
    {81, "Tl", 204.38, false, false}, {82, "Pb", 207.2, false, false},
    {83, "Bi", 208.980, false, false},{84, "Po", 209.0, false, false},
}};

const std::unordered_map<std::string, uint8_t>& symbol_table() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string, uint8_t>();
    for (const auto& e : kElements) {
      t->emplace(e.symbol, e.atomic_number);
      if (e.aromatic_capable) {
        std::string lower(e.symbol);
        for (char& c : lower) c = static_cast<char>(std::tolower(c));
        t->emplace(lower, e.atomic_number);
      }
    }
    return t;
  }();
  return *table;
}

}  // namespace

std::optional<uint8_t> element_from_symbol(std::string_view symbol) {
  auto it = symbol_table().find(std::string(symbol));
  if (it == symbol_table().end()) return std::nullopt;
  return it->second;
}

const ElementInfo& element_info(uint8_t atomic_number) {
  static const auto* by_number = [] {
    auto* t = new std::array<const ElementInfo*, 128>();
    t->fill(nullptr);
    for (const auto& e : kElements) (*t)[e.atomic_number] = &e;
    return t;
  }();
  const ElementInfo* info = (*by_number)[atomic_number];
  if (info == nullptr) {
    static const ElementInfo unknown{0, "?", 0.0, false, false};
    return unknown;
  }
  return *info;
}

std::vector<int> allowed_valences(uint8_t z, int charge) {
  auto shifted = [charge](std::initializer_list<int> base) {
    std::vector<int> out;
    for (int v : base) {
      int adj = v + charge;
      if (adj >= 0) out.push_back(adj);
    }
    return out;
  };
  switch (z) {
    case kBoron:
      // Anionic boron gains a bond ([B-](F)(F)(F)F), cationic loses one.
      return {3 - charge};
    case kCarbon:
      return {4 - std::abs(charge)};
    case kNitrogen:
      return shifted({3, 5});
    case kOxygen:
      return shifted({2});
    case kPhosphorus:
      return shifted({3, 5});
    case kSulfur:
      return shifted({2, 4, 6});
    case kFluorine:
    case kChlorine:
    case kBromine:
    case kIodine: {
      int v = 1 - charge;
      return {v < 0 ? 0 : v};
    }
    default:
      return {};  // no valence model outside the organic subset
  }
}

}  // namespace leadopt::chem
