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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "atomprior/descriptors.hpp"
#include "atomprior/knowledge_base.hpp"
#include "atomprior/molgraph.hpp"

namespace atomprior::cards {

class UnknownFeatureName : public std::invalid_argument {
 public:
  explicit UnknownFeatureName(const std::string& name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

//! The thirteen atom-level feature names offered to the model, in schema order.
const std::vector<std::string>& atom_feature_names();
bool is_atom_feature(const std::string& name);
bool is_molecule_feature(const std::string& name);

// Text formatting shared by cards and packets.
//! Shortest round-trip repr as Python prints a float: "0.1", "2.0", "1e-05", "1e+16", "inf", "nan".
std::string python_float_repr(double x);
//! Python round(x, ndigits) on the exact binary value.
double python_round(double x, int ndigits);
//! printf("%.3f").
std::string fixed3(double x);

//! N, O, S, P, F, Cl, Br, I.
bool is_heteroatom(const mol::Atom& a);
constexpr double kChargeThreshold = 0.10;
constexpr std::size_t kDefaultBudget = 20;

//! Atoms that must appear when the budget allows: H-bond donors/acceptors, charged or strongly
//! polarized atoms, heteroatoms, ring bridgeheads and aromatic carbons.
std::vector<bool> must_keep(const mol::Molecule& mol, const std::vector<desc::AtomAttributes>& attrs);

//! Up to budget atom indices in selection order. Oversized must-keep sets are cut by
//! (|charge| desc, aromatic first, index). Remaining slots are filled by the lexicographic key
//! (aromatic or conjugated, in ring, fused ring, 1/(1+bond distance to a heteroatom), sp or sp2),
//! descending, ties by index.
std::vector<int> select_functional_atoms(const mol::Molecule& mol, const std::vector<desc::AtomAttributes>& attrs,
                                         std::size_t budget = kDefaultBudget);

struct AtomCard {
  int token_id = 0;
  int atom_index = 0;
  std::string symbol;
  //! Selected profile fields, already rendered, in schema order. Empty when the token has no profile.
  std::vector<std::pair<std::string, std::string>> selected_fields;
  bool has_profile = true;

  //! "[A<token>, Atom#<index>, <symbol>]: name=value, ..."
  std::string render() const;
};

//! Rendered value of one atom-level field of a profile; throws UnknownFeatureName.
std::string render_profile_field(const kb::AtomTokenProfile& p, const std::string& name);

AtomCard make_card(int token, int atom_index, const std::string& symbol, const kb::AtomTokenProfile* profile,
                   const std::vector<std::string>& atom_features);

struct MoleculeFeature {
  std::string name;
  double value = 0.0;
  bool integral = false;
};

struct EvidencePacket {
  std::string smiles;
  std::string tokens_rendered;
  //! Present only for analogues.
  std::optional<double> similarity;
  std::optional<std::string> ground_truth;
  std::vector<AtomCard> atom_cards;
  std::vector<MoleculeFeature> molecule_features;

  std::string render_smf() const;
  std::string render() const;
};

//! Everything known about one molecule needed to build its packet.
struct PacketSource {
  std::string smiles;
  const mol::Molecule* mol = nullptr;
  const std::vector<int>* tokens = nullptr;
  const std::vector<desc::AtomAttributes>* attrs = nullptr;
  desc::MoleculeDescriptors descriptors;
};

//! "yes"/"no" for class flags, the Python repr for regression values.
std::string render_label(double label, bool classification);

//! Throws UnknownFeatureName for names outside the schema lists and std::invalid_argument on misaligned input.
EvidencePacket build_evidence_packet(const PacketSource& src, std::optional<double> similarity,
                                     std::optional<std::string> ground_truth,
                                     const std::vector<std::string>& atom_features,
                                     const std::vector<std::string>& molecule_features, const kb::KnowledgeBase& kb,
                                     std::size_t budget = kDefaultBudget);

}  // namespace atomprior::cards
