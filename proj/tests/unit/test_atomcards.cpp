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

#include <algorithm>
#include <cmath>
#include <limits>

#include "atomprior/atomcards.hpp"
#include "fixture_case.hpp"
#include "generators.hpp"

namespace atomprior::cards {
namespace {

using mol::parse_smiles;

TEST(Format, PythonFloatRepr) {
  EXPECT_EQ(python_float_repr(0.1), "0.1");
  EXPECT_EQ(python_float_repr(2.0), "2.0");
  EXPECT_EQ(python_float_repr(-0.0), "-0.0");
  EXPECT_EQ(python_float_repr(1e-05), "1e-05");
  EXPECT_EQ(python_float_repr(0.0001), "0.0001");
  EXPECT_EQ(python_float_repr(1e16), "1e+16");
  EXPECT_EQ(python_float_repr(1234567890123456.0), "1234567890123456.0");
  EXPECT_EQ(python_float_repr(6.908255240747004), "6.908255240747004");
  EXPECT_EQ(python_float_repr(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(python_float_repr(std::nan("")), "nan");
}

TEST(Format, PythonRoundAndFixed) {
  EXPECT_EQ(python_float_repr(python_round(3.2998, 3)), "3.3");
  EXPECT_EQ(python_float_repr(python_round(487.611, 3)), "487.611");
  // 2.675 is stored just below the midpoint.
  EXPECT_EQ(python_float_repr(python_round(2.675, 2)), "2.67");
  EXPECT_EQ(fixed3(-0.0589), "-0.059");
  EXPECT_EQ(fixed3(2.0), "2.000");
}

TEST(Names, ThirteenAtomFeatures) {
  EXPECT_EQ(atom_feature_names().size(), 13u);
  EXPECT_TRUE(is_atom_feature("neighbors_top"));
  EXPECT_FALSE(is_atom_feature("TPSA"));
  EXPECT_TRUE(is_molecule_feature("TPSA"));
}

TEST(Select, BenzeneKeepsAllSix) {
  const auto m = parse_smiles("c1ccccc1");
  auto sel = select_functional_atoms(m, desc::atom_attributes(m));
  std::sort(sel.begin(), sel.end());
  EXPECT_EQ(sel, (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(Select, ButaneFilledByPriority) {
  const auto m = parse_smiles("CCCC");
  const auto attrs = desc::atom_attributes(m);
  const auto keep = must_keep(m, attrs);
  EXPECT_EQ(std::count(keep.begin(), keep.end(), true), 0);
  auto sel = select_functional_atoms(m, attrs);
  std::sort(sel.begin(), sel.end());
  EXPECT_EQ(sel, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Select, FillFollowsPriorityKey) {
  // The terminal =CH2 crosses the charge threshold; its sp2 partner outranks the sp3 chain.
  const auto ene = parse_smiles("CCCCC=C");
  const auto ene_attrs = desc::atom_attributes(ene);
  const auto keep = must_keep(ene, ene_attrs);
  EXPECT_EQ(std::count(keep.begin(), keep.end(), true), 1);
  EXPECT_TRUE(keep[5]);
  EXPECT_EQ(select_functional_atoms(ene, ene_attrs, 2), (std::vector<int>{5, 4}));
  // Chlorine is kept; the remaining slots go to the carbons nearest to it.
  const auto cl = parse_smiles("CCCCCCl");
  EXPECT_EQ(select_functional_atoms(cl, desc::atom_attributes(cl), 3), (std::vector<int>{5, 4, 3}));
}

TEST(Select, BudgetRespected) {
  const auto m = parse_smiles("OCC(O)C(O)C(O)C(O)CO");
  const auto attrs = desc::atom_attributes(m);
  for (std::size_t budget : {0u, 1u, 3u, 20u}) {
    const auto sel = select_functional_atoms(m, attrs, budget);
    EXPECT_EQ(sel.size(), std::min<std::size_t>(budget, m.num_atoms()));
  }
}

TEST(Select, TwentyFiveHeteroatomsUseSortOracle) {
  // 25 hydroxyls on a carbon chain: 25 must-keep oxygens plus hydroxylated carbons over |q| >= 0.10.
  std::string s = "C";
  for (int i = 0; i < 25; ++i) {
    s += "C(O)";
  }
  s += "C";
  const auto m = parse_smiles(s);
  const auto attrs = desc::atom_attributes(m);
  const auto keep = must_keep(m, attrs);
  std::vector<int> kept;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) kept.push_back(static_cast<int>(i));
  }
  ASSERT_GE(kept.size(), 25u);
  std::vector<std::tuple<double, int, int>> keys;
  for (int i : kept) {
    keys.emplace_back(-std::abs(attrs[static_cast<std::size_t>(i)].gasteiger_charge),
                      m.atoms[static_cast<std::size_t>(i)].aromatic ? 0 : 1, i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> expect;
  for (std::size_t k = 0; k < 20; ++k) expect.push_back(std::get<2>(keys[k]));
  EXPECT_EQ(select_functional_atoms(m, attrs, 20), expect);
}

TEST(Select, MisalignedAttributesThrow) {
  const auto m = parse_smiles("CCO");
  EXPECT_THROW(select_functional_atoms(m, {}), std::invalid_argument);
}

TEST(Cards, RenderAndUnknownToken) {
  kb::AtomTokenProfile p;
  p.token_id = 3;
  p.support_count = 10;
  p.primary_symbol = "N";
  p.env_distribution = {{"ring", 4}, {"fused_ring", 1}, {"chain", 5}};
  p.polarity.gasteiger_q50 = -0.25;
  const AtomCard c = make_card(3, 7, "N", &p, {"ring_ratio", "support_count", "gasteiger_q50"});
  EXPECT_EQ(c.render(), "[A3, Atom#7, N]: support_count=10, gasteiger_q50=-0.250, ring_ratio=0.500");
  EXPECT_EQ(make_card(9, 1, "C", nullptr, {"ring_ratio"}).render(), "[A9, Atom#1, C]: token not in knowledge base");
  EXPECT_THROW(make_card(3, 7, "N", &p, {"TPSA"}), UnknownFeatureName);
  EXPECT_THROW(render_profile_field(p, "nope"), UnknownFeatureName);
}

TEST(Packet, AnalogueLayout) {
  const auto c = testing::load_prompt_case();
  EXPECT_EQ(c.analogues[0].render(), testing::read_file(testing::data_path("prompts/packet_analogue.txt")));
  EXPECT_EQ(c.query.render(), testing::read_file(testing::data_path("prompts/packet_query.txt")));
  const std::string text = c.analogues[0].render();
  const auto sim = text.find("Similarity: 0.928");
  const auto gt = text.find("GT: yes");
  ASSERT_NE(sim, std::string::npos);
  ASSERT_NE(gt, std::string::npos);
  EXPECT_LT(sim, gt);
  const std::string q = c.query.render();
  EXPECT_EQ(q.find("Similarity:"), std::string::npos);
  EXPECT_EQ(q.find("GT:"), std::string::npos);
}

struct Built {
  mol::Molecule mol;
  std::vector<desc::AtomAttributes> attrs;
  std::vector<int> tokens;
  PacketSource src;
};

Built build(const std::string& smiles) {
  Built b;
  b.mol = parse_smiles(smiles);
  b.attrs = desc::atom_attributes(b.mol);
  b.tokens = testing::toy_tokens(b.mol, 8);
  b.src.smiles = smiles;
  b.src.descriptors = desc::molecule_descriptors(b.mol, b.attrs);
  return b;
}

TEST(Packet, ZeroAtomFeaturesLeavesSafEmpty) {
  Built b = build("CC(=O)Nc1ccc(O)cc1");
  b.src.mol = &b.mol;
  b.src.tokens = &b.tokens;
  b.src.attrs = &b.attrs;
  const kb::KnowledgeBase kb;
  const auto p = build_evidence_packet(b.src, std::nullopt, std::nullopt, {}, {"TPSA", "HBD"}, kb);
  EXPECT_TRUE(p.atom_cards.empty());
  EXPECT_EQ(p.render_smf(), "{'TPSA': 49.33, 'HBD': 2}");
  EXPECT_NE(p.render().find("SAF:\n\nSMF:\n"), std::string::npos);
}

TEST(Packet, CardsSortedAndBounded) {
  Built b = build("Fc1cc(cc(F)c1)CC(NC(=O)C)C(O)C[NH2+]C1(CCCCC1)c1cc(ccc1)C1CCOC1");
  b.src.mol = &b.mol;
  b.src.tokens = &b.tokens;
  b.src.attrs = &b.attrs;
  const kb::KnowledgeBase kb;
  const auto p = build_evidence_packet(b.src, 0.5, std::string("no"), {"support_count"}, {}, kb, 20);
  ASSERT_EQ(p.atom_cards.size(), 20u);
  for (std::size_t i = 1; i < p.atom_cards.size(); ++i) {
    EXPECT_LT(p.atom_cards[i - 1].atom_index, p.atom_cards[i].atom_index);
  }
  EXPECT_EQ(p.atom_cards[0].symbol, "F");
  EXPECT_THROW(build_evidence_packet(b.src, std::nullopt, std::nullopt, {"LogP"}, {}, kb), UnknownFeatureName);
  EXPECT_THROW(build_evidence_packet(b.src, std::nullopt, std::nullopt, {}, {"gasteiger_q50"}, kb),
               UnknownFeatureName);
}

TEST(Packet, Labels) {
  EXPECT_EQ(render_label(1.0, true), "yes");
  EXPECT_EQ(render_label(0.0, true), "no");
  EXPECT_EQ(render_label(-3.5, false), "-3.5");
}

TEST(Select, GeneratedMoleculesKeepMustKeep) {
  for (const auto& s : testing::random_smiles_set(300, 41)) {
    const auto m = parse_smiles(s);
    const auto attrs = desc::atom_attributes(m);
    const auto keep = must_keep(m, attrs);
    const auto sel = select_functional_atoms(m, attrs, 20);
    EXPECT_EQ(sel.size(), std::min<std::size_t>(20, m.num_atoms()));
    const auto n_keep = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true));
    if (n_keep <= 20) {
      for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i]) {
          EXPECT_NE(std::find(sel.begin(), sel.end(), static_cast<int>(i)), sel.end()) << s << " atom " << i;
        }
      }
    }
    EXPECT_EQ(sel, select_functional_atoms(m, desc::atom_attributes(m), 20));
  }
}

}  // namespace
}  // namespace atomprior::cards
