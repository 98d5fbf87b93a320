//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/smiles.hpp"

#include <doctest.h>

#include "leadopt/chem/canonical.hpp"
#include "support/chem_support.hpp"

using namespace leadopt;
using namespace leadopt::chem;

TEST_CASE("ethanol parses to a three-atom chain") {
  MolGraph mol = parse_smiles("CCO");
  REQUIRE(mol.atom_count() == 3);
  REQUIRE(mol.bond_count() == 2);
  CHECK(mol.atoms()[0].atomic_number == kCarbon);
  CHECK(mol.atoms()[1].atomic_number == kCarbon);
  CHECK(mol.atoms()[2].atomic_number == kOxygen);
  for (const Bond& b : mol.bonds()) CHECK(b.order == BondOrder::kSingle);
  CHECK(mol.atoms()[0].hydrogens == 3);
  CHECK(mol.atoms()[1].hydrogens == 2);
  CHECK(mol.atoms()[2].hydrogens == 1);
}

TEST_CASE("benzene literal gives six aromatic carbons in one ring") {
  MolGraph mol = parse_smiles("c1ccccc1");
  REQUIRE(mol.atom_count() == 6);
  REQUIRE(mol.bond_count() == 6);
  for (const Atom& a : mol.atoms()) {
    CHECK(a.aromatic);
    CHECK(a.atomic_number == kCarbon);
    CHECK(a.hydrogens == 1);
    CHECK(a.in_ring);
  }
  for (const Bond& b : mol.bonds()) CHECK(b.order == BondOrder::kAromatic);
  CHECK(mol.ring_count() == 1);
}

TEST_CASE("syntax errors") {
  CHECK_THROWS_AS(parse_smiles("C("), SyntaxError);
  CHECK_THROWS_AS(parse_smiles(""), SyntaxError);
  CHECK_THROWS_AS(parse_smiles("   "), SyntaxError);
  CHECK_THROWS_AS(parse_smiles("C1CC"), SyntaxError);     // unclosed ring
  CHECK_THROWS_AS(parse_smiles("C)"), SyntaxError);       // unmatched close
  CHECK_THROWS_AS(parse_smiles("CC="), SyntaxError);      // dangling bond
  CHECK_THROWS_AS(parse_smiles("C(=)O"), SyntaxError);    // bond before ')'
  CHECK_THROWS_AS(parse_smiles("=CC"), SyntaxError);      // bond with no atom
  CHECK_THROWS_AS(parse_smiles("C==C"), SyntaxError);
  CHECK_THROWS_AS(parse_smiles("C()"), SyntaxError);      // empty branch
  CHECK_THROWS_AS(parse_smiles("[Xx]"), SyntaxError);     // unknown element
  CHECK_THROWS_AS(parse_smiles("[C"), SyntaxError);       // unterminated bracket
  CHECK_THROWS_AS(parse_smiles("[]"), SyntaxError);
  CHECK_THROWS_AS(parse_smiles("C%1C"), SyntaxError);     // %n needs two digits
  CHECK_THROWS_AS(parse_smiles("C11"), SyntaxError);      // self ring closure
  CHECK_THROWS_AS(parse_smiles("C1CC=1CC-1"), SyntaxError);
  CHECK_THROWS_AS(parse_smiles("C=1CCCC-1"), SyntaxError);  // conflicting orders
  CHECK_THROWS_AS(parse_smiles("cc"), SyntaxError);       // aromatic outside ring
  CHECK_THROWS_AS(parse_smiles("C:C"), SyntaxError);      // ':' needs aromatic atoms
  CHECK_THROWS_AS(parse_smiles("Zz"), SyntaxError);
}

TEST_CASE("valence errors") {
  CHECK_THROWS_AS(parse_smiles("O(C)(C)C"), ValenceError);
  CHECK_THROWS_AS(parse_smiles("F=C"), ValenceError);
  CHECK_THROWS_AS(parse_smiles("FF(F)F"), ValenceError);
  CHECK_THROWS_AS(parse_smiles("C(C)(C)(C)(C)C"), ValenceError);
  CHECK_THROWS_AS(parse_smiles("[CH5]"), ValenceError);   // bracket H exceeds carbon
}

TEST_CASE("bracket atoms") {
  MolGraph ammonium = parse_smiles("[NH4+]");
  CHECK(ammonium.atoms()[0].charge == 1);
  CHECK(ammonium.atoms()[0].hydrogens == 4);

  MolGraph label = parse_smiles("[13CH4]");
  CHECK(label.atoms()[0].isotope == 13);
  CHECK(label.atoms()[0].hydrogens == 4);

  MolGraph acetate = parse_smiles("CC(=O)[O-]");
  CHECK(acetate.atoms()[3].charge == -1);
  CHECK(acetate.atoms()[3].hydrogens == 0);

  MolGraph tma = parse_smiles("C[N+](C)(C)C");
  CHECK(tma.atoms()[1].charge == 1);
  CHECK(tma.atoms()[1].hydrogens == 0);

  MolGraph stereo = parse_smiles("N[C@@H](C)C(=O)O");
  CHECK(stereo.atoms()[1].chirality == Chirality::kClockwise);
  CHECK(stereo.atoms()[1].hydrogens == 1);

  MolGraph cls = parse_smiles("[CH3:7]C");  // atom class accepted and dropped
  CHECK(cls.atoms()[0].hydrogens == 3);
}

TEST_CASE("aromatic hydrogen resolution") {
  MolGraph pyridine = parse_smiles("n1ccccc1");
  CHECK(pyridine.atoms()[0].hydrogens == 0);

  MolGraph pyrrole = parse_smiles("c1cc[nH]c1");
  int n_index = -1;
  for (size_t i = 0; i < pyrrole.atom_count(); ++i) {
    if (pyrrole.atoms()[i].atomic_number == kNitrogen) n_index = static_cast<int>(i);
  }
  REQUIRE(n_index >= 0);
  CHECK(pyrrole.atoms()[static_cast<size_t>(n_index)].hydrogens == 1);

  MolGraph furan = parse_smiles("c1ccoc1");
  for (const Atom& a : furan.atoms()) {
    if (a.atomic_number == kOxygen) CHECK(a.hydrogens == 0);
  }

  // Aromatic carbon with an exocyclic double bond carries no extra pi slot.
  MolGraph pyridinone = parse_smiles("O=c1cccc[nH]1");
  CHECK(pyridinone.atoms()[1].hydrogens == 0);
}

TEST_CASE("implicit bonds between aromatic atoms demote outside rings") {
  // Biphenyl written without the explicit single bond.
  MolGraph biphenyl = parse_smiles("c1ccccc1c1ccccc1");
  int single = 0, aromatic = 0;
  for (const Bond& b : biphenyl.bonds()) {
    if (b.order == BondOrder::kSingle) ++single;
    if (b.order == BondOrder::kAromatic) ++aromatic;
  }
  CHECK(single == 1);
  CHECK(aromatic == 12);
  CHECK(canonicalize(biphenyl).text ==
        canonicalize(parse_smiles("c1ccccc1-c1ccccc1")).text);
}

TEST_CASE("disconnected fragments") {
  MolGraph salt = parse_smiles("[Na+].[Cl-]");
  CHECK(salt.atom_count() == 2);
  CHECK(salt.bond_count() == 0);
  CHECK_THROWS_AS(parse_smiles("C(.C)C"), SyntaxError);
}

TEST_CASE("ring closure with %nn digits") {
  MolGraph mol = parse_smiles("C%12CCCCC%12");
  CHECK(mol.ring_count() == 1);
  CHECK(mol.atom_count() == 6);
}

TEST_CASE("drug-like corpus parses cleanly") {
  for (const std::string& smiles : leadopt::test::drug_smiles()) {
    CAPTURE(smiles);
    CHECK_NOTHROW(parse_smiles(smiles));
  }
}
