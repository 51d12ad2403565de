// SPDX-FileCopyrightText: Copyright (c) 2026 The atomprior Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "atomprior/descriptors.hpp"
#include "generators.hpp"

namespace atomprior::desc {
namespace {

using mol::parse_smiles;

TEST(Weight, Ethanol) { EXPECT_NEAR(molecular_weight(parse_smiles("CCO")), 2 * 12.011 + 6 * 1.008 + 15.999, 0.01); }

TEST(Descriptors, Benzene) {
  const auto d = molecule_descriptors(parse_smiles("c1ccccc1"));
  EXPECT_EQ(d.NumAromaticRings, 1);
  EXPECT_EQ(d.NumHeteroatoms, 0);
  EXPECT_EQ(d.FormalCharge, 0);
  EXPECT_EQ(d.TPSA, 0.0);
  EXPECT_EQ(d.HBA, 0);
  EXPECT_EQ(d.HBD, 0);
}

TEST(Tpsa, PyridineAndEthanol) {
  EXPECT_NEAR(molecule_descriptors(parse_smiles("c1ccncc1")).TPSA, 12.89, 0.005);
  const auto t = tpsa_contributions(parse_smiles("CCO"));
  EXPECT_EQ(t.contributions[0], 0.0);
  EXPECT_NEAR(t.contributions[2], 20.23, 0.005);
}

TEST(Gasteiger, MethaneSymmetryAndNeutralAtom) {
  const auto g = gasteiger_charges(parse_smiles("C"));
  EXPECT_LT(g.charges[0], 0.0);
  EXPECT_NEAR(g.charges[0] + g.hydrogen_charges[0], 0.0, 1e-12);
  // Four identical hydrogens share the folded charge equally by construction; the total is what is exposed.
  EXPECT_GT(g.hydrogen_charges[0], 0.0);
}

TEST(Gasteiger, MissingParametersFlagged) {
  const auto g = gasteiger_charges(parse_smiles("[Hg+2]"));
  ASSERT_EQ(g.missing_parameters.size(), 1u);
  EXPECT_EQ(g.charges[0], 2.0);
}

TEST(HBond, EthanolAcetamideBenzene) {
  const auto eth = hbond_roles(parse_smiles("CCO"));
  EXPECT_TRUE(eth.donor[2]);
  EXPECT_TRUE(eth.acceptor[2]);
  const auto am = hbond_roles(parse_smiles("CC(=O)N"));
  EXPECT_TRUE(am.acceptor[2]);
  EXPECT_TRUE(am.donor[3]);
  EXPECT_FALSE(am.acceptor[3]);
  const auto bz = hbond_roles(parse_smiles("c1ccccc1"));
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_FALSE(bz.donor[i] || bz.acceptor[i]);
  }
  const auto pyrrole = hbond_roles(parse_smiles("c1cc[nH]c1"));
  EXPECT_FALSE(pyrrole.acceptor[3]);
  EXPECT_TRUE(pyrrole.donor[3]);
}

TEST(Descriptors, QueryMoleculeReferenceValues) {
  const auto d = molecule_descriptors(parse_smiles("Fc1cc(cc(F)c1)CC(NC(=O)C)C(O)C[NH2+]C1(CCCCC1)c1cc(ccc1)C1CCOCOC1"));
  EXPECT_NEAR(d.TPSA, 84.40, 0.01);
  EXPECT_NEAR(d.LogP, 3.274, 0.5);
  EXPECT_NEAR(d.MolWt, 517.637, 0.01);
  EXPECT_EQ(d.HBA, 4);
  EXPECT_EQ(d.HBD, 3);
  EXPECT_EQ(d.NumAromaticRings, 2);
  EXPECT_EQ(d.NumHeteroatoms, 8);
  EXPECT_EQ(d.FormalCharge, 1);
}

TEST(Descriptors, AnalogueReferenceValues) {
  const auto d = molecule_descriptors(parse_smiles("Fc1cc(cc(F)c1)CC(NC(=O)C)C(O)C[NH2+]C1(CCCCC1)c1cc(ccc1)C1CCOC1"));
  EXPECT_NEAR(d.TPSA, 75.17, 0.01);
  EXPECT_NEAR(d.LogP, 3.299, 0.01);
  EXPECT_NEAR(d.MolWt, 487.611, 0.01);
  EXPECT_EQ(d.HBA, 3);
  EXPECT_EQ(d.HBD, 3);
  EXPECT_EQ(d.NumRotatableBonds, 9);
  EXPECT_EQ(d.NumHeteroatoms, 7);
}

TEST(Descriptors, NamesAndLookup) {
  const auto& names = molecule_descriptor_names();
  ASSERT_EQ(names.size(), 9u);
  EXPECT_EQ(names.front(), "TPSA");
  EXPECT_EQ(names.back(), "FormalCharge");
  MoleculeDescriptors d;
  d.HBA = 7;
  EXPECT_EQ(descriptor_value(d, "HBA"), 7.0);
  EXPECT_THROW(descriptor_value(d, "Bogus"), std::out_of_range);
}

TEST(Attributes, SignsAreBounded) {
  for (const auto& s : testing::random_smiles_set(100, 3)) {
    for (const auto& a : atom_attributes(parse_smiles(s))) {
      EXPECT_GE(a.inductive_sign, -1);
      EXPECT_LE(a.inductive_sign, 1);
      EXPECT_GE(a.resonance_sign, -1);
      EXPECT_LE(a.resonance_sign, 1);
    }
  }
  const auto f = atom_attributes(parse_smiles("CF"));
  EXPECT_EQ(f[1].inductive_sign, -1);
}

TEST(Properties, InvariantsOnGeneratedMolecules) {
  for (const auto& s : testing::random_smiles_set(300, 11)) {
    SCOPED_TRACE(s);
    const mol::Molecule m = parse_smiles(s);
    const auto attrs = atom_attributes(m);
    const auto d = molecule_descriptors(m, attrs);
    const auto g = gasteiger_charges(m);

    double tpsa = 0.0;
    double total_q = 0.0;
    int hbd = 0, hba = 0, no = 0, nos = 0, hetero = 0, formal = 0;
    for (std::size_t i = 0; i < m.num_atoms(); ++i) {
      const auto& a = m.atoms[i];
      tpsa += attrs[i].tpsa_contrib;
      EXPECT_GE(attrs[i].tpsa_contrib, 0.0);
      if (a.element == "C") {
        EXPECT_EQ(attrs[i].tpsa_contrib, 0.0);
      }
      EXPECT_TRUE(std::isfinite(g.charges[i]));
      total_q += g.charges[i] + g.hydrogen_charges[i];
      hbd += attrs[i].is_hbd;
      hba += attrs[i].is_hba;
      no += a.element == "N" || a.element == "O";
      nos += a.element == "N" || a.element == "O" || a.element == "S";
      hetero += a.element != "C";
      formal += a.formal_charge;
    }
    EXPECT_NEAR(d.TPSA, tpsa, 1e-9);
    EXPECT_NEAR(total_q, static_cast<double>(formal), 1e-6);
    EXPECT_EQ(d.HBD, hbd);
    EXPECT_EQ(d.HBA, hba);
    EXPECT_LE(hbd, no);
    EXPECT_LE(hba, nos);
    EXPECT_EQ(d.NumHeteroatoms, hetero);
    EXPECT_EQ(d.FormalCharge, formal);
  }
}

TEST(Properties, RespellingInvariance) {
  std::uint64_t seed = 0;
  for (const auto& s : testing::random_smiles_set(150, 17)) {
    const mol::Molecule m = parse_smiles(s);
    const mol::Molecule r = parse_smiles(mol::write_smiles(m, {.random_seed = ++seed}));
    const auto a = molecule_descriptors(m);
    const auto b = molecule_descriptors(r);
    SCOPED_TRACE(s);
    EXPECT_NEAR(a.TPSA, b.TPSA, 1e-9);
    EXPECT_NEAR(a.LogP, b.LogP, 1e-9);
    EXPECT_NEAR(a.MolWt, b.MolWt, 1e-9);
    EXPECT_EQ(a.HBA, b.HBA);
    EXPECT_EQ(a.HBD, b.HBD);
    EXPECT_EQ(a.NumAromaticRings, b.NumAromaticRings);
    EXPECT_EQ(a.NumRotatableBonds, b.NumRotatableBonds);
    EXPECT_EQ(a.NumHeteroatoms, b.NumHeteroatoms);
  }
}

}  // namespace
}  // namespace atomprior::desc
