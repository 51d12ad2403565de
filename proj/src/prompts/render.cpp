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

#include <stdexcept>

#include "atomprior/prompts.hpp"

namespace atomprior::prompts {

namespace detail {
const std::map<std::string, std::string>& embedded_templates();
}  // namespace detail

std::string Prompt::text() const { return "System:\n" + system + "\n\nUser:\n" + user; }

const std::string& template_text(std::string_view name) {
  const auto& all = detail::embedded_templates();
  const auto it = all.find(std::string(name));
  if (it == all.end()) {
    throw std::out_of_range("no prompt template named " + std::string(name));
  }
  return it->second;
}

std::vector<std::string> template_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : detail::embedded_templates()) {
    out.push_back(k);
  }
  return out;
}

std::string fill(std::string_view tmpl, const std::map<std::string, std::string>& slots) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      const std::size_t close = tmpl.find('}', i + 1);
      if (close != std::string_view::npos) {
        const auto it = slots.find(std::string(tmpl.substr(i + 1, close - i - 1)));
        if (it != slots.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

namespace {

Prompt from_templates(const std::string& base, const std::map<std::string, std::string>& slots) {
  return {fill(template_text(base + ".system"), slots), fill(template_text(base + ".user"), slots)};
}

}  // namespace

std::vector<Prompt> stage1_messages(const std::string& instruction) {
  if (instruction.empty()) {
    throw std::invalid_argument("task instruction is empty");
  }
  const std::map<std::string, std::string> slots = {{"instruction", instruction}};
  return {from_templates("stage1_round1", slots), from_templates("stage1_round2", slots),
          from_templates("stage1_round3", slots)};
}

std::string render_feature_descriptions(const FeatureSelection& s) {
  std::string out;
  auto add = [&](const std::vector<std::string>& names) {
    for (const auto& n : names) {
      const auto it = s.feature_descriptions.find(n);
      if (it == s.feature_descriptions.end()) {
        continue;
      }
      if (!out.empty()) {
        out += "\n";
      }
      out += n + ": " + it->second;
    }
  };
  add(s.atom_features);
  add(s.molecule_features);
  return out;
}

Prompt stage3_prompt(const Task& task, const FeatureSelection& selection, const cards::EvidencePacket& query,
                     const std::vector<cards::EvidencePacket>& analogues) {
  std::string saf;
  for (const auto& c : query.atom_cards) {
    if (!saf.empty()) {
      saf += "\n";
    }
    saf += c.render();
  }
  std::string isa;
  for (const auto& a : analogues) {
    if (!isa.empty()) {
      isa += "\n\n";
    }
    isa += a.render();
  }
  if (analogues.empty()) {
    isa = std::string(kNoAnalogues);
  }
  const std::map<std::string, std::string> slots = {
      {"instruction", task.instruction},
      {"feature_descriptions", render_feature_descriptions(selection)},
      {"smiles", query.smiles},
      {"query_tokens", query.tokens_rendered},
      {"atom_features", saf},
      {"molecule_features", query.render_smf()},
      {"similar_analysis", isa}};
  return from_templates(task.kind == TaskKind::Regression ? "stage3_regression" : "stage3_classification", slots);
}

Prompt baseline_prompt(BaselineStyle style, const Task& task, const std::string& smiles,
                       const std::vector<LabeledExample>& examples) {
  if (task.kind != TaskKind::Classification) {
    throw std::invalid_argument("baseline prompts are defined for classification tasks only");
  }
  const std::map<std::string, std::string> slots = {
      {"TASK_NAME", task.name}, {"QUESTION", task.instruction}, {"SMILES", smiles}};
  Prompt p = from_templates(style == BaselineStyle::Direct ? "baseline_direct" : "baseline_cot", slots);
  if (!examples.empty()) {
    std::string block = "Examples:\n";
    for (const auto& e : examples) {
      block += "SMILES: " + e.smiles + " | Answer: " + e.label + "\n";
    }
    p.user = block + "\n" + p.user;
  }
  return p;
}

}  // namespace atomprior::prompts
