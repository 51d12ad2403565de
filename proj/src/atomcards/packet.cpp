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

#include <algorithm>
#include <string>

#include "atomprior/atomcards.hpp"
#include "atomprior/tokenizer.hpp"

namespace atomprior::cards {

UnknownFeatureName::UnknownFeatureName(const std::string& name)
    : std::invalid_argument("unknown feature name: " + name), name_(name) {}

const std::vector<std::string>& atom_feature_names() {
  static const std::vector<std::string> kNames = {
      "support_count",  "primary_symbol",   "is_mixed",   "mixture_entropy", "gasteiger_q50",
      "gasteiger_iqr",  "hba_ratio",        "hbd_ratio",  "aromatic_ratio",  "conjugated_ratio",
      "ring_ratio",     "median_degree",    "neighbors_top"};
  return kNames;
}

bool is_atom_feature(const std::string& name) {
  const auto& names = atom_feature_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_molecule_feature(const std::string& name) {
  const auto& names = desc::molecule_descriptor_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

std::string neighbors_repr(const std::vector<kb::NeighborStat>& nbrs) {
  std::string out = "[";
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += "{'token': " + std::to_string(nbrs[i].token) + ", 'pmi': " + python_float_repr(nbrs[i].pmi) +
           ", 'co_occur_ratio': " + python_float_repr(nbrs[i].co_occur_ratio) + "}";
  }
  return out + "]";
}

bool integral_descriptor(const std::string& name) { return name != "TPSA" && name != "LogP" && name != "MolWt"; }

}  // namespace

std::string render_profile_field(const kb::AtomTokenProfile& p, const std::string& name) {
  if (name == "support_count") {
    return std::to_string(p.support_count);
  }
  if (name == "primary_symbol") {
    return p.primary_symbol;
  }
  if (name == "is_mixed") {
    return p.is_mixed ? "True" : "False";
  }
  if (name == "mixture_entropy") {
    return fixed3(p.mixture_entropy);
  }
  if (name == "gasteiger_q50") {
    return fixed3(p.polarity.gasteiger_q50);
  }
  if (name == "gasteiger_iqr") {
    return fixed3(p.polarity.gasteiger_iqr);
  }
  if (name == "hba_ratio") {
    return fixed3(p.hbond.acceptor_ratio);
  }
  if (name == "hbd_ratio") {
    return fixed3(p.hbond.donor_ratio);
  }
  if (name == "aromatic_ratio") {
    return fixed3(p.aromatic_ratio);
  }
  if (name == "conjugated_ratio") {
    return fixed3(p.conjugated_ratio);
  }
  if (name == "ring_ratio") {
    return fixed3(p.ring_ratio());
  }
  if (name == "median_degree") {
    return fixed3(p.median_degree);
  }
  if (name == "neighbors_top") {
    return neighbors_repr(p.neighbors_top);
  }
  throw UnknownFeatureName(name);
}

AtomCard make_card(int token, int atom_index, const std::string& symbol, const kb::AtomTokenProfile* profile,
                   const std::vector<std::string>& atom_features) {
  for (const auto& f : atom_features) {
    if (!is_atom_feature(f)) {
      throw UnknownFeatureName(f);
    }
  }
  AtomCard card;
  card.token_id = token;
  card.atom_index = atom_index;
  card.symbol = symbol;
  card.has_profile = profile != nullptr;
  if (profile == nullptr) {
    return card;
  }
  for (const auto& name : atom_feature_names()) {
    if (std::find(atom_features.begin(), atom_features.end(), name) != atom_features.end()) {
      card.selected_fields.emplace_back(name, render_profile_field(*profile, name));
    }
  }
  return card;
}

std::string AtomCard::render() const {
  std::string out = "[A" + std::to_string(token_id) + ", Atom#" + std::to_string(atom_index) + ", " + symbol + "]:";
  if (!has_profile) {
    return out + " token not in knowledge base";
  }
  for (std::size_t i = 0; i < selected_fields.size(); ++i) {
    out += (i == 0 ? " " : ", ") + selected_fields[i].first + "=" + selected_fields[i].second;
  }
  return out;
}

std::string EvidencePacket::render_smf() const {
  std::string out = "{";
  for (std::size_t i = 0; i < molecule_features.size(); ++i) {
    const MoleculeFeature& f = molecule_features[i];
    if (i > 0) {
      out += ", ";
    }
    out += "'" + f.name + "': ";
    out += f.integral ? std::to_string(static_cast<long long>(f.value)) : python_float_repr(python_round(f.value, 3));
  }
  return out + "}";
}

std::string EvidencePacket::render() const {
  std::string out = "SMILES: " + smiles + "\n\nDTS: " + tokens_rendered + "\n\n";
  if (similarity) {
    out += "Similarity: " + fixed3(*similarity) + "\n\n";
  }
  if (ground_truth) {
    out += "GT: " + *ground_truth + "\n\n";
  }
  out += "SAF:\n";
  for (const auto& c : atom_cards) {
    out += c.render() + "\n";
  }
  out += "\nSMF:\n" + render_smf();
  return out;
}

std::string render_label(double label, bool classification) {
  if (classification) {
    return label >= 0.5 ? "yes" : "no";
  }
  return python_float_repr(label);
}

EvidencePacket build_evidence_packet(const PacketSource& src, std::optional<double> similarity,
                                     std::optional<std::string> ground_truth,
                                     const std::vector<std::string>& atom_features,
                                     const std::vector<std::string>& molecule_features, const kb::KnowledgeBase& kb,
                                     std::size_t budget) {
  for (const auto& f : atom_features) {
    if (!is_atom_feature(f)) {
      throw UnknownFeatureName(f);
    }
  }
  for (const auto& f : molecule_features) {
    if (!is_molecule_feature(f)) {
      throw UnknownFeatureName(f);
    }
  }
  const mol::Molecule& m = *src.mol;
  const std::vector<int>& tokens = *src.tokens;
  if (tokens.size() != m.num_atoms()) {
    throw std::invalid_argument("token sequence does not match atom count");
  }

  EvidencePacket p;
  p.smiles = src.smiles;
  p.tokens_rendered = tok::render_tokens(tokens);
  p.similarity = similarity;
  p.ground_truth = std::move(ground_truth);

  if (!atom_features.empty()) {
    std::vector<int> chosen = select_functional_atoms(m, *src.attrs, budget);
    std::sort(chosen.begin(), chosen.end());
    for (int i : chosen) {
      const int t = tokens[static_cast<std::size_t>(i)];
      p.atom_cards.push_back(make_card(t, i, m.atoms[static_cast<std::size_t>(i)].element, kb.find(t), atom_features));
    }
  }

  for (const auto& name : desc::molecule_descriptor_names()) {
    if (std::find(molecule_features.begin(), molecule_features.end(), name) != molecule_features.end()) {
      p.molecule_features.push_back({name, desc::descriptor_value(src.descriptors, name), integral_descriptor(name)});
    }
  }
  return p;
}

}  // namespace atomprior::cards
