//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leadopt::chem {

struct ElementInfo {
  uint8_t atomic_number;
  const char* symbol;
  double weight;          // standard atomic weight, Da
  bool organic_subset;    // may appear outside brackets
  bool aromatic_capable;  // may carry an aromatic flag
};

/// Lookup by symbol as written in SMILES ("Cl", "c", "Se", ...). Lowercase
/// aromatic symbols resolve to their element. Unknown symbols return nullopt.
std::optional<uint8_t> element_from_symbol(std::string_view symbol);

const ElementInfo& element_info(uint8_t atomic_number);

/// Allowed total valences (bond order sum + hydrogens) for an organic-subset
/// element at the given formal charge, sorted ascending. Empty when the
/// element is outside the organic subset (no valence model applies).
std::vector<int> allowed_valences(uint8_t atomic_number, int charge);

constexpr uint8_t kHydrogen = 1;
constexpr uint8_t kBoron = 5;
constexpr uint8_t kCarbon = 6;
constexpr uint8_t kNitrogen = 7;
constexpr uint8_t kOxygen = 8;
constexpr uint8_t kFluorine = 9;
constexpr uint8_t kPhosphorus = 15;
constexpr uint8_t kSulfur = 16;
constexpr uint8_t kChlorine = 17;
constexpr uint8_t kBromine = 35;
constexpr uint8_t kIodine = 53;

}  // namespace leadopt::chem
