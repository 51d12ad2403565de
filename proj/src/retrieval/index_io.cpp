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

#include <fstream>

#include <nlohmann/json.hpp>

#include "atomprior/retrieval.hpp"

namespace atomprior::retrieval {
namespace {

constexpr const char* kFormat = "atomprior-index-v1";

nlohmann::ordered_json descriptors_to_json(const desc::MoleculeDescriptors& d) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& name : desc::molecule_descriptor_names()) {
    j[name] = desc::descriptor_value(d, name);
  }
  return j;
}

desc::MoleculeDescriptors descriptors_from_json(const nlohmann::json& j) {
  desc::MoleculeDescriptors d;
  d.TPSA = j.at("TPSA").get<double>();
  d.LogP = j.at("LogP").get<double>();
  d.MolWt = j.at("MolWt").get<double>();
  d.HBA = static_cast<int>(j.at("HBA").get<double>());
  d.HBD = static_cast<int>(j.at("HBD").get<double>());
  d.NumAromaticRings = static_cast<int>(j.at("NumAromaticRings").get<double>());
  d.NumRotatableBonds = static_cast<int>(j.at("NumRotatableBonds").get<double>());
  d.NumHeteroatoms = static_cast<int>(j.at("NumHeteroatoms").get<double>());
  d.FormalCharge = static_cast<int>(j.at("FormalCharge").get<double>());
  return d;
}

}  // namespace

void save_index(const std::string& path, const AnalogueIndex& index) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write index: " + path);
  }
  nlohmann::ordered_json header = {{"format", kFormat},
                                   {"kind", index.kind == LabelKind::Classification ? "classification" : "regression"},
                                   {"radius", index.radius},
                                   {"nbits", index.nbits}};
  out << header.dump() << '\n';
  for (const auto& e : index.entries) {
    nlohmann::ordered_json j = {{"smiles", e.smiles},
                                {"label", e.label},
                                {"bits", e.fingerprint.on_bits()},
                                {"tokens", e.tokens},
                                {"descriptors", descriptors_to_json(e.descriptors)}};
    out << j.dump() << '\n';
  }
}

AnalogueIndex load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open index: " + path);
  }
  AnalogueIndex index;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      if (!have_header) {
        if (j.value("format", "") != kFormat) {
          throw std::runtime_error("missing index header");
        }
        index.kind = j.at("kind").get<std::string>() == "regression" ? LabelKind::Regression
                                                                      : LabelKind::Classification;
        index.radius = j.at("radius").get<int>();
        index.nbits = j.at("nbits").get<std::size_t>();
        have_header = true;
        continue;
      }
      IndexEntry e;
      e.smiles = j.at("smiles").get<std::string>();
      e.label = j.at("label").get<double>();
      e.fingerprint = Fingerprint::from_bits(index.nbits, j.at("bits").get<std::vector<int>>());
      e.tokens = j.at("tokens").get<std::vector<int>>();
      e.descriptors = descriptors_from_json(j.at("descriptors"));
      index.entries.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
  if (!have_header) {
    throw std::runtime_error(path + ": empty index file");
  }
  return index;
}

}  // namespace atomprior::retrieval
