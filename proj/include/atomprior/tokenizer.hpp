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
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "atomprior/molgraph.hpp"

namespace atomprior::tok {

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got);
};

struct Codebook {
  std::size_t dim = 0;
  std::vector<std::vector<double>> codewords;

  std::size_t size() const { return codewords.size(); }
  //! Throws std::invalid_argument if empty, ragged or non-finite.
  void validate() const;

  nlohmann::json to_json() const;
  static Codebook from_json(const nlohmann::json& j);
  static Codebook load(const std::string& path);
  void save(const std::string& path) const;
};

//! Index of the nearest codeword by squared Euclidean distance; ties go to the lower index.
int assign_token(std::span<const double> embedding, const Codebook& codebook);

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::size_t dim() const = 0;
  virtual std::vector<double> embed(const mol::Molecule& mol, int atom) const = 0;
  //! One embedding per atom, in atom order.
  virtual std::vector<std::vector<double>> embed_all(const mol::Molecule& mol) const;
};

//! Hashed Morgan-style invariants at radii 0..2 (element, charge, degree, H count, aromaticity, ring flag)
//! bucketed into dim signed slots.
class InvariantEmbedding final : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDefaultDim = 64;
  static constexpr int kRadius = 2;

  explicit InvariantEmbedding(std::size_t dim = kDefaultDim);
  std::size_t dim() const override { return dim_; }
  std::vector<double> embed(const mol::Molecule& mol, int atom) const override;
  std::vector<std::vector<double>> embed_all(const mol::Molecule& mol) const override;

 private:
  std::size_t dim_;
};

std::vector<double> default_invariant_embedding(const mol::Molecule& mol, int atom,
                                                std::size_t dim = InvariantEmbedding::kDefaultDim);

struct TokenSequence {
  std::vector<int> tokens;
  //! "A<id> A<id> ..."
  std::string rendered() const;
};

std::string render_tokens(const std::vector<int>& tokens);

TokenSequence tokenize(const mol::Molecule& mol, const EmbeddingProvider& provider, const Codebook& codebook);

//! Codebook from the max_k most frequent distinct embeddings of a sample (ties: lexicographic vector order).
Codebook build_codebook(const std::vector<std::vector<double>>& samples, std::size_t max_k = 512);

}  // namespace atomprior::tok
