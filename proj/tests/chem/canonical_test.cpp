//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/canonical.hpp"

#include <doctest.h>

#include <string>
#include <vector>

#include "leadopt/chem/smiles.hpp"
#include "leadopt/util/rng.hpp"
#include "support/chem_support.hpp"

using namespace leadopt;
using namespace leadopt::chem;
using leadopt::test::drug_smiles;
using leadopt::test::random_permutation;

TEST_CASE("atom order does not matter") {
  CHECK(canonicalize(parse_smiles("OCC")).text == canonicalize(parse_smiles("CCO")).text);
  CHECK(canonicalize(parse_smiles("C(O)C")).text == canonicalize(parse_smiles("CCO")).text);
  CHECK(canonicalize(parse_smiles("c1ccncc1")).text ==
        canonicalize(parse_smiles("n1ccccc1")).text);
}

TEST_CASE("canonicalization is idempotent") {
  for (const std::string& smiles : drug_smiles()) {
    CAPTURE(smiles);
    CanonicalSmiles once = canonicalize(parse_smiles(smiles));
    CanonicalSmiles twice = canonicalize(parse_smiles(once.text));
    CHECK(once.text == twice.text);
  }
}

TEST_CASE("random atom permutations map to one canonical string") {
  util::SplitMix64 rng(20260810);
  for (const std::string& smiles : drug_smiles()) {
    CAPTURE(smiles);
    MolGraph mol = parse_smiles(smiles);
    std::string expected = canonicalize(mol).text;
    for (int i = 0; i < 20; ++i) {
      MolGraph shuffled = random_permutation(mol, rng);
      CHECK(canonicalize(shuffled).text == expected);
    }
  }
}

TEST_CASE("round trip preserves the graph") {
  for (const std::string& smiles : drug_smiles()) {
    CAPTURE(smiles);
    MolGraph mol = parse_smiles(smiles);
    CanonicalSmiles canon = canonicalize(mol);
    MolGraph reparsed = parse_smiles(canon.text);
    CHECK(reparsed.atom_count() == mol.atom_count());
    CHECK(reparsed.bond_count() == mol.bond_count());
    CHECK(canonicalize(reparsed).text == canon.text);
  }
}

TEST_CASE("kekule and aromatic inputs are distinct graphs") {
  // Aromaticity is taken from the input; no perception from alternating
  // bonds is attempted.
  CHECK(canonicalize(parse_smiles("C1=CC=CC=C1")).text !=
        canonicalize(parse_smiles("c1ccccc1")).text);
}

TEST_CASE("charged and isotope atoms survive the round trip") {
  for (const std::string smiles :
       {"C[N+](C)(C)C", "CC(=O)[O-]", "[13CH4]", "[NH4+]", "O=[N+]([O-])c1ccccc1",
        "[nH]1cccc1"}) {
    CAPTURE(smiles);
    CanonicalSmiles canon = canonicalize(parse_smiles(smiles));
    CHECK(canonicalize(parse_smiles(canon.text)).text == canon.text);
  }
}

TEST_CASE("fragments are ordered deterministically") {
  std::string a = canonicalize(parse_smiles("[Na+].[Cl-]")).text;
  std::string b = canonicalize(parse_smiles("[Cl-].[Na+]")).text;
  CHECK(a == b);
}

TEST_CASE("stereo annotations do not affect the canonical form") {
  CHECK(canonicalize(parse_smiles("N[C@@H](C)C(=O)O")).text ==
        canonicalize(parse_smiles("N[C@H](C)C(=O)O")).text);
  CHECK(canonicalize(parse_smiles("F/C=C/F")).text ==
        canonicalize(parse_smiles("FC=CF")).text);
}
