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
#include <numeric>
#include <set>

#include "atomprior/molgraph.hpp"
#include "generators.hpp"

namespace atomprior::mol {
namespace {

int count_components(const Molecule& m) {
  std::vector<int> parent(m.num_atoms());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  for (const auto& b : m.bonds) {
    parent[find(b.a)] = find(b.b);
  }
  std::set<int> roots;
  for (std::size_t i = 0; i < m.num_atoms(); ++i) {
    roots.insert(find(static_cast<int>(i)));
  }
  return static_cast<int>(roots.size());
}

TEST(Parse, Methane) {
  const Molecule m = parse_smiles("C");
  ASSERT_EQ(m.num_atoms(), 1u);
  EXPECT_EQ(m.num_bonds(), 0u);
  EXPECT_EQ(m.atoms[0].element, "C");
  EXPECT_EQ(m.atoms[0].implicit_h, 4);
  EXPECT_EQ(m.atoms[0].degree, 0);
  EXPECT_EQ(m.atoms[0].hybridization, Hybridization::SP3);
}

TEST(Parse, Ethanol) {
  const Molecule m = parse_smiles("CCO");
  ASSERT_EQ(m.num_atoms(), 3u);
  ASSERT_EQ(m.num_bonds(), 2u);
  for (const auto& b : m.bonds) {
    EXPECT_EQ(b.order, BondOrder::Single);
  }
  EXPECT_EQ(m.atoms[2].element, "O");
  EXPECT_EQ(m.atoms[2].implicit_h, 1);
}

TEST(Parse, BenzeneIsOneAromaticRing) {
  const Molecule m = parse_smiles("c1ccccc1");
  ASSERT_EQ(m.rings.size(), 1u);
  EXPECT_EQ(m.rings[0].size(), 6u);
  for (const auto& a : m.atoms) {
    EXPECT_TRUE(a.aromatic);
    EXPECT_EQ(a.env_type, EnvType::Ring);
    EXPECT_EQ(a.smallest_ring_size, 6);
  }
}

TEST(Parse, KekuleBenzenePerceivedAromatic) {
  const Molecule m = parse_smiles("C1=CC=CC=C1");
  for (const auto& a : m.atoms) {
    EXPECT_TRUE(a.aromatic);
  }
}

TEST(Rings, AcyclicAndCyclopropane) {
  EXPECT_TRUE(parse_smiles("CCCC").rings.empty());
  const Molecule m = parse_smiles("C1CC1");
  ASSERT_EQ(m.rings.size(), 1u);
  EXPECT_EQ(m.rings[0].size(), 3u);
}

TEST(Rings, NaphthaleneFusionAtoms) {
  const Molecule m = parse_smiles("c1ccc2ccccc2c1");
  EXPECT_EQ(m.rings.size(), 2u);
  int fused = 0;
  for (std::size_t i = 0; i < m.num_atoms(); ++i) {
    if (m.atoms[i].env_type == EnvType::FusedRing) {
      ++fused;
      EXPECT_EQ(m.atoms[i].ring_count, 2);
    }
  }
  EXPECT_EQ(fused, 2);
  EXPECT_EQ(m.atoms[3].env_type, EnvType::FusedRing);
  EXPECT_EQ(m.atoms[8].env_type, EnvType::FusedRing);
}

TEST(Aromaticity, CyclohexaneAndPyridine) {
  for (const auto& a : parse_smiles("C1CCCCC1").atoms) {
    EXPECT_FALSE(a.aromatic);
  }
  const Molecule py = parse_smiles("c1ccncc1");
  for (const auto& a : py.atoms) {
    EXPECT_TRUE(a.aromatic);
  }
  EXPECT_EQ(py.atoms[3].implicit_h, 0);
}

TEST(Aromaticity, PyrroleNitrogenKeepsHydrogen) {
  const Molecule m = parse_smiles("c1cc[nH]c1");
  for (const auto& a : m.atoms) {
    EXPECT_TRUE(a.aromatic);
  }
  EXPECT_EQ(m.atoms[3].implicit_h, 1);
}

TEST(Aromaticity, ImpossibleKekuleStructureFails) {
  try {
    parse_smiles("c1cccc1");
    FAIL() << "expected a SmilesError";
  } catch (const SmilesError& e) {
    EXPECT_EQ(e.kind(), SmilesErrorKind::KekulizationFailure);
  }
}

struct BadCase {
  const char* smiles;
  SmilesErrorKind kind;
};

class ParseErrors : public ::testing::TestWithParam<BadCase> {};

TEST_P(ParseErrors, KindAndOffset) {
  const BadCase c = GetParam();
  try {
    parse_smiles(c.smiles);
    FAIL() << c.smiles << " parsed";
  } catch (const SmilesError& e) {
    EXPECT_EQ(e.kind(), c.kind) << c.smiles << ": " << e.what();
    EXPECT_LE(e.offset(), std::string(c.smiles).size());
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, ParseErrors,
                         ::testing::Values(BadCase{"", SmilesErrorKind::EmptyInput},
                                           BadCase{"C1CC", SmilesErrorKind::UnbalancedRingClosure},
                                           BadCase{"C[NH4", SmilesErrorKind::UnbalancedBracket},
                                           BadCase{"CC(C", SmilesErrorKind::UnbalancedParen},
                                           BadCase{"CC)C", SmilesErrorKind::UnbalancedParen},
                                           BadCase{"C[Xx]C", SmilesErrorKind::UnknownElement},
                                           BadCase{"C(C)(C)(C)(C)C", SmilesErrorKind::ValenceViolation},
                                           BadCase{"O=O=O", SmilesErrorKind::ValenceViolation}));

TEST(Parse, OffsetPointsAtProblem) {
  try {
    parse_smiles("CCC[Qq]");
    FAIL();
  } catch (const SmilesError& e) {
    EXPECT_EQ(e.kind(), SmilesErrorKind::UnknownElement);
    EXPECT_GE(e.offset(), 3u);
  }
}

TEST(Parse, BracketAtomsAndStereoMarkers) {
  const Molecule m = parse_smiles("C[C@H](N)C(=O)[O-]");
  EXPECT_EQ(m.atoms[1].implicit_h, 1);
  EXPECT_EQ(m.atoms[5].formal_charge, -1);
  const Molecule iso = parse_smiles("[13CH4]");
  EXPECT_EQ(iso.atoms[0].isotope, 13);
  EXPECT_EQ(iso.atoms[0].implicit_h, 4);
  EXPECT_EQ(parse_smiles("F/C=C/F").num_atoms(), 4u);
}

TEST(Parse, PercentRingClosures) {
  const Molecule m = parse_smiles("C%10CCCCC%10");
  EXPECT_EQ(m.rings.size(), 1u);
}

TEST(Parse, NitroSpellingsAgree) {
  const Molecule a = parse_smiles("c1ccccc1N(=O)=O");
  const Molecule b = parse_smiles("c1ccccc1[N+](=O)[O-]");
  EXPECT_EQ(invariant_multiset(a), invariant_multiset(b));
}

TEST(Bonds, RotatableExcludesAmideAndRing) {
  const Molecule m = parse_smiles("CCCC");
  int rot = 0;
  for (const auto& b : m.bonds) {
    rot += b.rotatable ? 1 : 0;
  }
  EXPECT_EQ(rot, 1);
  const Molecule amide = parse_smiles("CC(=O)NCC");
  EXPECT_FALSE(amide.bonds[static_cast<std::size_t>(amide.bond_between(1, 3))].rotatable);
  EXPECT_TRUE(amide.bonds[static_cast<std::size_t>(amide.bond_between(3, 4))].rotatable);
  EXPECT_FALSE(parse_smiles("C1CCCCC1").bonds[0].rotatable);
}

// Properties over generated molecules.

class GeneratedMolecules : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { smiles_ = new std::vector<std::string>(testing::random_smiles_set(300, 7)); }
  static void TearDownTestSuite() { delete smiles_; }
  static std::vector<std::string>* smiles_;
};
std::vector<std::string>* GeneratedMolecules::smiles_ = nullptr;

TEST_F(GeneratedMolecules, GraphInvariants) {
  for (const auto& s : *smiles_) {
    SCOPED_TRACE(s);
    const Molecule m = parse_smiles(s);
    int degree_sum = 0;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < m.num_atoms(); ++i) {
      const Atom& a = m.atoms[i];
      degree_sum += a.degree;
      EXPECT_EQ(a.degree, static_cast<int>(m.neighbors(static_cast<int>(i)).size()));
      EXPECT_EQ(a.in_ring, a.smallest_ring_size > 0);
      if (a.env_type == EnvType::FusedRing) {
        EXPECT_GE(a.ring_count, 2);
      }
    }
    EXPECT_EQ(degree_sum, 2 * static_cast<int>(m.num_bonds()));
    for (const auto& b : m.bonds) {
      EXPECT_NE(b.a, b.b);
      EXPECT_TRUE(seen.insert({std::min(b.a, b.b), std::max(b.a, b.b)}).second);
      if (b.order == BondOrder::Aromatic) {
        EXPECT_TRUE(m.atoms[b.a].aromatic && m.atoms[b.b].aromatic);
      }
      if (b.rotatable) {
        EXPECT_EQ(b.order, BondOrder::Single);
        EXPECT_FALSE(b.in_ring);
        EXPECT_GE(m.atoms[b.a].degree, 2);
        EXPECT_GE(m.atoms[b.b].degree, 2);
      }
    }
    const int cyclomatic =
        static_cast<int>(m.num_bonds()) - static_cast<int>(m.num_atoms()) + count_components(m);
    EXPECT_EQ(static_cast<int>(m.rings.size()), cyclomatic);
    std::set<int> ring_atoms;
    for (const auto& r : m.rings) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        ring_atoms.insert(r[k]);
        EXPECT_GE(m.bond_between(r[k], r[(k + 1) % r.size()]), 0) << "ring is not a cycle";
      }
      EXPECT_EQ(std::set<int>(r.begin(), r.end()).size(), r.size());
    }
    for (std::size_t i = 0; i < m.num_atoms(); ++i) {
      EXPECT_EQ(m.atoms[i].in_ring, ring_atoms.count(static_cast<int>(i)) == 1);
    }
  }
}

TEST_F(GeneratedMolecules, ParsingIsDeterministic) {
  for (const auto& s : *smiles_) {
    const Molecule a = parse_smiles(s);
    const Molecule b = parse_smiles(s);
    ASSERT_EQ(a.num_atoms(), b.num_atoms());
    for (std::size_t i = 0; i < a.num_atoms(); ++i) {
      EXPECT_EQ(a.atoms[i].element, b.atoms[i].element);
      EXPECT_EQ(a.atoms[i].implicit_h, b.atoms[i].implicit_h);
      EXPECT_EQ(a.atoms[i].aromatic, b.atoms[i].aromatic);
      EXPECT_EQ(a.atoms[i].hybridization, b.atoms[i].hybridization);
    }
    EXPECT_EQ(a.rings, b.rings);
  }
}

TEST_F(GeneratedMolecules, RespellingKeepsInvariants) {
  for (std::size_t k = 0; k < smiles_->size(); ++k) {
    const Molecule m = parse_smiles((*smiles_)[k]);
    const std::string again = write_smiles(m, {.random_seed = k});
    SCOPED_TRACE((*smiles_)[k] + " -> " + again);
    const Molecule r = parse_smiles(again);
    EXPECT_EQ(invariant_multiset(m), invariant_multiset(r));
    EXPECT_EQ(m.rings.size(), r.rings.size());
  }
}

TEST(Invariants, OccVsCco) { EXPECT_EQ(invariant_multiset(parse_smiles("OCC")), invariant_multiset(parse_smiles("CCO"))); }

TEST(Invariants, DistinguishIsomers) {
  EXPECT_NE(invariant_multiset(parse_smiles("CCCO")), invariant_multiset(parse_smiles("CC(C)O")));
}

}  // namespace
}  // namespace atomprior::mol
