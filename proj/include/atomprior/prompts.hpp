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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atomprior/atomcards.hpp"

namespace atomprior::prompts {

enum class TaskKind { Classification, Regression };

struct Task {
  //! Short dataset name, e.g. "BACE".
  std::string name;
  //! Natural-language property statement given to the model.
  std::string instruction;
  TaskKind kind = TaskKind::Classification;
};

struct Prompt {
  std::string system;
  std::string user;
  //! "System:\n<system>\n\nUser:\n<user>"
  std::string text() const;
  bool operator==(const Prompt&) const = default;
};

//! Raw template text by asset name, e.g. "stage1_round1.system"; throws std::out_of_range.
const std::string& template_text(std::string_view name);
std::vector<std::string> template_names();

//! Replaces {slot} for the given slot names only, in one left-to-right pass; other braces are kept.
std::string fill(std::string_view tmpl, const std::map<std::string, std::string>& slots);

// Stage I.
//! The three feature-selection rounds in dialogue order.
std::vector<Prompt> stage1_messages(const std::string& instruction);

struct FeatureSelection {
  std::vector<std::string> atom_features;
  std::vector<std::string> molecule_features;
  std::map<std::string, std::string> feature_descriptions;
  bool operator==(const FeatureSelection&) const = default;
};

//! Every schema name, with no descriptions.
FeatureSelection full_selection();

struct SelectionParse {
  FeatureSelection selection;
  //! Dropped names, duplicate names and missing descriptions.
  std::vector<std::string> warnings;
};

class NoJsonFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class EmptySelection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! First balanced JSON object in the response, tolerant of prose and code fences.
SelectionParse parse_feature_selection(std::string_view response);
nlohmann::ordered_json selection_to_json(const FeatureSelection& s);

// Stage III.
//! "name: description" per selected name that has a description, atom features first.
std::string render_feature_descriptions(const FeatureSelection& s);
constexpr std::string_view kNoAnalogues = "No similar examples available";

//! Classification or regression template; analogue packets are joined by blank lines.
Prompt stage3_prompt(const Task& task, const FeatureSelection& selection, const cards::EvidencePacket& query,
                     const std::vector<cards::EvidencePacket>& analogues);

// Baselines.
enum class BaselineStyle { Direct, ChainOfThought };

struct LabeledExample {
  std::string smiles;
  std::string label;
};

//! Zero-shot when examples is empty; few-shot prepends one "SMILES: ... | Answer: ..." line per example.
//! Classification only; throws std::invalid_argument for regression tasks.
Prompt baseline_prompt(BaselineStyle style, const Task& task, const std::string& smiles,
                       const std::vector<LabeledExample>& examples = {});

// Answers.
enum class ParseErrorKind { MissingAnswerTag, MissingConfidenceTag, UnparsableNumber };
std::string_view to_string(ParseErrorKind k);

class AnswerParseError : public std::runtime_error {
 public:
  AnswerParseError(ParseErrorKind kind, const std::string& what);
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

struct ParsedAnswer {
  std::string analysis;
  //! Classification only.
  std::optional<bool> label;
  std::optional<int> confidence;
  //! Regression only.
  std::optional<double> value;
  //! yes with confidence <= 50, or no with confidence >= 50.
  bool conflict = false;
  std::vector<std::string> warnings;
};

//! Uses the last occurrence of each tag. Throws AnswerParseError.
ParsedAnswer parse_answer(std::string_view response, TaskKind kind);

}  // namespace atomprior::prompts
