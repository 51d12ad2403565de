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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "atomprior/descriptors.hpp"
#include "atomprior/molgraph.hpp"

namespace atomprior::retrieval {

class WidthMismatch : public std::invalid_argument {
 public:
  WidthMismatch(std::size_t a, std::size_t b);
};

class Fingerprint {
 public:
  Fingerprint() = default;
  explicit Fingerprint(std::size_t nbits);
  static Fingerprint from_bits(std::size_t nbits, const std::vector<int>& on_bits);

  void set(std::size_t bit);
  bool test(std::size_t bit) const;
  std::size_t nbits() const { return nbits_; }
  std::size_t popcount() const { return popcount_; }
  std::vector<int> on_bits() const;
  const std::vector<std::uint64_t>& words() const { return words_; }
  bool operator==(const Fingerprint&) const = default;

 private:
  std::size_t nbits_ = 0;
  std::size_t popcount_ = 0;
  std::vector<std::uint64_t> words_;
};

//! ECFP-style circular fingerprint: iterated neighborhood hashes at radii 0..radius folded modulo nbits.
//! Environments covering the same bond set as an earlier one are dropped.
Fingerprint morgan_fingerprint(const mol::Molecule& mol, int radius = 2, std::size_t nbits = 2048);

//! Intersection over union of set bits; both empty gives 0.
double tanimoto(const Fingerprint& a, const Fingerprint& b);

enum class LabelKind { Classification, Regression };

struct IndexEntry {
  std::string smiles;
  Fingerprint fingerprint;
  double label = 0.0;
  std::vector<int> tokens;
  desc::MoleculeDescriptors descriptors;
};

struct AnalogueIndex {
  LabelKind kind = LabelKind::Classification;
  int radius = 2;
  std::size_t nbits = 2048;
  std::vector<IndexEntry> entries;
};

struct Hit {
  std::size_t index = 0;
  double similarity = 0.0;
  bool operator==(const Hit&) const = default;
};

//! k most similar entries, similarity descending then lower index. Entries whose SMILES equals
//! exclude_smiles are skipped. OpenMP scan with a deterministic merge.
std::vector<Hit> top_k(const Fingerprint& query, const AnalogueIndex& index, std::size_t k,
                       std::optional<std::string_view> exclude_smiles = std::nullopt);
//! Single-threaded reference with identical results.
std::vector<Hit> top_k_serial(const Fingerprint& query, const AnalogueIndex& index, std::size_t k,
                              std::optional<std::string_view> exclude_smiles = std::nullopt);

//! One JSON object per line: smiles, label, bits, tokens, descriptors. A header line carries kind/radius/nbits.
void save_index(const std::string& path, const AnalogueIndex& index);
AnalogueIndex load_index(const std::string& path);

}  // namespace atomprior::retrieval
