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
#include <optional>

#include <nlohmann/json.hpp>

#include "atomprior/prompts.hpp"

namespace atomprior::prompts {
namespace {

//! End (exclusive) of the balanced object opening at start, honoring JSON strings.
std::optional<std::size_t> balanced_end(std::string_view s, std::size_t start) {
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) {
        return i + 1;
      }
    }
  }
  return std::nullopt;
}

std::optional<nlohmann::json> first_object(std::string_view s) {
  for (std::size_t pos = s.find('{'); pos != std::string_view::npos; pos = s.find('{', pos + 1)) {
    const auto end = balanced_end(s, pos);
    if (!end) {
      continue;
    }
    auto j = nlohmann::json::parse(s.substr(pos, *end - pos), nullptr, false);
    if (!j.is_discarded() && j.is_object()) {
      return j;
    }
  }
  return std::nullopt;
}

std::vector<std::string> read_names(const nlohmann::json& j, const char* key, bool (*known)(const std::string&),
                                    std::vector<std::string>& warnings) {
  std::vector<std::string> out;
  const auto it = j.find(key);
  if (it == j.end()) {
    return out;
  }
  if (!it->is_array()) {
    warnings.push_back(std::string(key) + " is not a list; ignored");
    return out;
  }
  for (const auto& v : *it) {
    if (!v.is_string()) {
      warnings.push_back(std::string(key) + ": non-string entry dropped");
      continue;
    }
    const std::string name = v.get<std::string>();
    if (!known(name)) {
      warnings.push_back(std::string(key) + ": unknown name '" + name + "' dropped");
    } else if (std::find(out.begin(), out.end(), name) != out.end()) {
      warnings.push_back(std::string(key) + ": duplicate name '" + name + "' dropped");
    } else {
      out.push_back(name);
    }
  }
  return out;
}

}  // namespace

FeatureSelection full_selection() {
  FeatureSelection s;
  s.atom_features = cards::atom_feature_names();
  s.molecule_features = desc::molecule_descriptor_names();
  return s;
}

SelectionParse parse_feature_selection(std::string_view response) {
  const auto j = first_object(response);
  if (!j) {
    throw NoJsonFound("no JSON object in feature-selection response");
  }
  SelectionParse out;
  FeatureSelection& s = out.selection;
  s.atom_features = read_names(*j, "atom_features", &cards::is_atom_feature, out.warnings);
  s.molecule_features = read_names(*j, "molecule_features", &cards::is_molecule_feature, out.warnings);
  if (s.atom_features.empty() && s.molecule_features.empty()) {
    throw EmptySelection("feature selection names no known features");
  }

  const auto d = j->find("feature_descriptions");
  const bool have_desc = d != j->end() && d->is_object();
  for (const auto* names : {&s.atom_features, &s.molecule_features}) {
    for (const auto& n : *names) {
      if (have_desc) {
        const auto it = d->find(n);
        if (it != d->end() && it->is_string()) {
          s.feature_descriptions[n] = it->get<std::string>();
          continue;
        }
      }
      out.warnings.push_back("no description for '" + n + "'");
    }
  }
  return out;
}

nlohmann::ordered_json selection_to_json(const FeatureSelection& s) {
  nlohmann::ordered_json desc = nlohmann::ordered_json::object();
  for (const auto* names : {&s.atom_features, &s.molecule_features}) {
    for (const auto& n : *names) {
      const auto it = s.feature_descriptions.find(n);
      if (it != s.feature_descriptions.end()) {
        desc[n] = it->second;
      }
    }
  }
  nlohmann::ordered_json j = {
      {"atom_features", s.atom_features}, {"molecule_features", s.molecule_features}, {"feature_descriptions", desc}};
  return j;
}

}  // namespace atomprior::prompts
