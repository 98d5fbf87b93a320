//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/descriptors.hpp"

#include <doctest.h>

#include "leadopt/chem/smiles.hpp"

using namespace leadopt::chem;

TEST_CASE("water") {
  Descriptors d = descriptors(parse_smiles("O"));
  CHECK(d.molecular_weight == doctest::Approx(18.02).epsilon(0.001));
  CHECK(d.hbd == 1);
  CHECK(d.hba == 1);
  CHECK(d.heavy_atom_count == 1);
  CHECK(d.ring_count == 0);
}

TEST_CASE("methane has no donors or acceptors") {
  Descriptors d = descriptors(parse_smiles("C"));
  CHECK(d.hbd == 0);
  CHECK(d.hba == 0);
}

TEST_CASE("ethanol") {
  Descriptors d = descriptors(parse_smiles("CCO"));
  CHECK(d.hbd == 1);
  CHECK(d.hba == 1);
  CHECK(d.heavy_atom_count == 3);
  CHECK(d.molecular_weight == doctest::Approx(46.07).epsilon(0.001));
}

TEST_CASE("ring counts") {
  CHECK(descriptors(parse_smiles("c1ccccc1")).ring_count == 1);
  CHECK(descriptors(parse_smiles("c1ccc2ccccc2c1")).ring_count == 2);
  CHECK(descriptors(parse_smiles("CC(C)C")).ring_count == 0);
  CHECK(descriptors(parse_smiles("C1CC2CCC1C2")).ring_count == 2);
}

TEST_CASE("explicit hydrogen atoms count toward donors") {
  Descriptors d = descriptors(parse_smiles("[H]O[H]"));
  CHECK(d.hbd == 1);
  CHECK(d.hba == 1);
  CHECK(d.heavy_atom_count == 1);
}

TEST_CASE("lipinski rule of five") {
  MolGraph ethanol = parse_smiles("CCO");
  CHECK(lipinski_pass(ethanol, -0.3));
  CHECK(lipinski_pass(ethanol, 5.0));    // bounds are inclusive
  CHECK_FALSE(lipinski_pass(ethanol, 5.01));

  // A C40 chain is far beyond the 500 Da bound.
  std::string heavy(40, 'C');
  CHECK_FALSE(lipinski_pass(parse_smiles(heavy), 1.0));

  // Too many donors: a polyol with 6 hydroxyls.
  MolGraph polyol = parse_smiles("OCC(O)C(O)C(O)C(O)CO");
  CHECK(descriptors(polyol).hbd == 6);
  CHECK_FALSE(lipinski_pass(polyol, 0.0));
}
