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

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "atomprior/atomcards.hpp"
#include "atomprior/knowledge_base.hpp"
#include "atomprior/prompts.hpp"
#include "atomprior/tokenizer.hpp"
#include "generators.hpp"

namespace atomprior::testing {

//! The checked-in stage3_case.json, turned into library types.
struct PromptCase {
  prompts::Task task;
  prompts::FeatureSelection selection;
  kb::KnowledgeBase kb;
  cards::EvidencePacket query;
  std::vector<cards::EvidencePacket> analogues;
};

inline cards::EvidencePacket case_packet(const nlohmann::ordered_json& j, const prompts::FeatureSelection& sel,
                                         const kb::KnowledgeBase& kb) {
  cards::EvidencePacket p;
  p.smiles = j.at("smiles").get<std::string>();
  p.tokens_rendered = tok::render_tokens(j.at("tokens").get<std::vector<int>>());
  if (!j.at("similarity").is_null()) {
    p.similarity = j.at("similarity").get<double>();
  }
  if (!j.at("ground_truth").is_null()) {
    p.ground_truth = j.at("ground_truth").get<std::string>();
  }
  for (const auto& c : j.at("cards")) {
    const int token = c[0].get<int>();
    p.atom_cards.push_back(cards::make_card(token, c[1].get<int>(), c[2].get<std::string>(), kb.find(token),
                                            sel.atom_features));
  }
  desc::MoleculeDescriptors d;
  const auto& v = j.at("descriptors");
  d.TPSA = v.at("TPSA").get<double>();
  d.LogP = v.at("LogP").get<double>();
  d.MolWt = v.at("MolWt").get<double>();
  d.HBA = v.at("HBA").get<int>();
  d.HBD = v.at("HBD").get<int>();
  d.NumAromaticRings = v.at("NumAromaticRings").get<int>();
  d.NumRotatableBonds = v.at("NumRotatableBonds").get<int>();
  d.NumHeteroatoms = v.at("NumHeteroatoms").get<int>();
  d.FormalCharge = v.at("FormalCharge").get<int>();
  for (const auto& name : desc::molecule_descriptor_names()) {
    const auto& mf = sel.molecule_features;
    if (std::find(mf.begin(), mf.end(), name) != mf.end()) {
      const bool integral = name != "TPSA" && name != "LogP" && name != "MolWt";
      p.molecule_features.push_back({name, desc::descriptor_value(d, name), integral});
    }
  }
  return p;
}

inline PromptCase load_prompt_case() {
  const auto j = nlohmann::ordered_json::parse(read_file(data_path("prompts/stage3_case.json")));
  PromptCase c;
  c.task = {j.at("task_name").get<std::string>(), j.at("instruction").get<std::string>(),
            prompts::TaskKind::Classification};
  const auto& s = j.at("selection");
  c.selection.atom_features = s.at("atom_features").get<std::vector<std::string>>();
  c.selection.molecule_features = s.at("molecule_features").get<std::vector<std::string>>();
  c.selection.feature_descriptions = s.at("feature_descriptions").get<std::map<std::string, std::string>>();
  std::vector<kb::AtomTokenProfile> profiles;
  for (const auto& p : j.at("profiles")) {
    profiles.push_back(kb::profile_from_json(p));
  }
  c.kb = kb::KnowledgeBase(std::move(profiles));
  c.query = case_packet(j.at("query"), c.selection, c.kb);
  for (const auto& a : j.at("analogues")) {
    c.analogues.push_back(case_packet(a, c.selection, c.kb));
  }
  return c;
}

}  // namespace atomprior::testing
