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

#include "atomprior/tokenizer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

#include "atomprior/hash.hpp"

namespace atomprior::tok {

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t got)
    : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                            std::to_string(got)) {}

void Codebook::validate() const {
  if (codewords.empty()) {
    throw std::invalid_argument("codebook has no codewords");
  }
  if (dim == 0) {
    throw std::invalid_argument("codebook dimension is zero");
  }
  for (std::size_t j = 0; j < codewords.size(); ++j) {
    if (codewords[j].size() != dim) {
      throw std::invalid_argument("codeword " + std::to_string(j) + " has length " +
                                  std::to_string(codewords[j].size()) + ", expected " + std::to_string(dim));
    }
    for (double v : codewords[j]) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("codeword " + std::to_string(j) + " is not finite");
      }
    }
  }
}

nlohmann::json Codebook::to_json() const {
  return nlohmann::json{{"dim", dim}, {"codewords", codewords}};
}

Codebook Codebook::from_json(const nlohmann::json& j) {
  Codebook cb;
  cb.dim = j.at("dim").get<std::size_t>();
  cb.codewords = j.at("codewords").get<std::vector<std::vector<double>>>();
  cb.validate();
  return cb;
}

Codebook Codebook::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open codebook: " + path);
  }
  return from_json(nlohmann::json::parse(in));
}

void Codebook::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write codebook: " + path);
  }
  out << to_json().dump() << '\n';
}

int assign_token(std::span<const double> embedding, const Codebook& codebook) {
  if (embedding.size() != codebook.dim) {
    throw DimensionMismatch(codebook.dim, embedding.size());
  }
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < codebook.codewords.size(); ++j) {
    const auto& c = codebook.codewords[j];
    double d = 0.0;
    for (std::size_t k = 0; k < embedding.size(); ++k) {
      const double diff = embedding[k] - c[k];
      d += diff * diff;
    }
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(j);
    }
  }
  if (best < 0) {
    throw std::invalid_argument("codebook has no codewords");
  }
  return best;
}

std::vector<std::vector<double>> EmbeddingProvider::embed_all(const mol::Molecule& mol) const {
  std::vector<std::vector<double>> out;
  out.reserve(mol.num_atoms());
  for (std::size_t i = 0; i < mol.num_atoms(); ++i) {
    out.push_back(embed(mol, static_cast<int>(i)));
  }
  return out;
}

namespace {

std::uint64_t atom_seed(const mol::Atom& a) {
  std::uint64_t h = 0x61746f6dULL;
  hash_combine(h, static_cast<std::uint64_t>(a.atomic_number));
  hash_combine(h, static_cast<std::uint64_t>(a.formal_charge + 16));
  hash_combine(h, static_cast<std::uint64_t>(a.degree));
  hash_combine(h, static_cast<std::uint64_t>(a.implicit_h));
  hash_combine(h, a.aromatic ? 1U : 0U);
  hash_combine(h, a.in_ring ? 1U : 0U);
  return h;
}

// Per-radius invariants for every atom; layer r holds the hash of the radius-r environment.
std::vector<std::vector<std::uint64_t>> invariant_layers(const mol::Molecule& mol) {
  const std::size_t n = mol.num_atoms();
  std::vector<std::vector<std::uint64_t>> layers(InvariantEmbedding::kRadius + 1, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    layers[0][i] = atom_seed(mol.atoms[i]);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nbrs;
  for (int r = 1; r <= InvariantEmbedding::kRadius; ++r) {
    const auto& prev = layers[r - 1];
    for (std::size_t i = 0; i < n; ++i) {
      nbrs.clear();
      for (const auto& nb : mol.neighbors(static_cast<int>(i))) {
        nbrs.emplace_back(static_cast<std::uint64_t>(mol.bonds[nb.bond].order), prev[nb.atom]);
      }
      std::sort(nbrs.begin(), nbrs.end());
      std::uint64_t h = static_cast<std::uint64_t>(r);
      hash_combine(h, prev[i]);
      for (const auto& [o, v] : nbrs) {
        hash_combine(h, o);
        hash_combine(h, v);
      }
      layers[r][i] = h;
    }
  }
  return layers;
}

std::vector<double> bucket(const std::vector<std::vector<std::uint64_t>>& layers, std::size_t atom, std::size_t dim) {
  std::vector<double> v(dim, 0.0);
  for (const auto& layer : layers) {
    const std::uint64_t h = mix64(layer[atom]);
    v[h % dim] += (h >> 63) != 0 ? -1.0 : 1.0;
  }
  return v;
}

}  // namespace

InvariantEmbedding::InvariantEmbedding(std::size_t dim) : dim_(dim) {
  if (dim == 0) {
    throw std::invalid_argument("embedding dimension must be positive");
  }
}

std::vector<double> InvariantEmbedding::embed(const mol::Molecule& mol, int atom) const {
  return bucket(invariant_layers(mol), static_cast<std::size_t>(atom), dim_);
}

std::vector<std::vector<double>> InvariantEmbedding::embed_all(const mol::Molecule& mol) const {
  const auto layers = invariant_layers(mol);
  std::vector<std::vector<double>> out;
  out.reserve(mol.num_atoms());
  for (std::size_t i = 0; i < mol.num_atoms(); ++i) {
    out.push_back(bucket(layers, i, dim_));
  }
  return out;
}

std::vector<double> default_invariant_embedding(const mol::Molecule& mol, int atom, std::size_t dim) {
  return InvariantEmbedding(dim).embed(mol, atom);
}

std::string render_tokens(const std::vector<int>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += 'A';
    out += std::to_string(tokens[i]);
  }
  return out;
}

std::string TokenSequence::rendered() const { return render_tokens(tokens); }

TokenSequence tokenize(const mol::Molecule& mol, const EmbeddingProvider& provider, const Codebook& codebook) {
  if (provider.dim() != codebook.dim) {
    throw DimensionMismatch(codebook.dim, provider.dim());
  }
  TokenSequence seq;
  seq.tokens.reserve(mol.num_atoms());
  for (const auto& e : provider.embed_all(mol)) {
    seq.tokens.push_back(assign_token(e, codebook));
  }
  return seq;
}

Codebook build_codebook(const std::vector<std::vector<double>>& samples, std::size_t max_k) {
  if (samples.empty() || max_k == 0) {
    throw std::invalid_argument("build_codebook needs samples and max_k > 0");
  }
  std::map<std::vector<double>, std::size_t> counts;
  for (const auto& s : samples) {
    if (s.size() != samples.front().size()) {
      throw DimensionMismatch(samples.front().size(), s.size());
    }
    ++counts[s];
  }
  std::vector<std::pair<const std::vector<double>*, std::size_t>> ranked;
  ranked.reserve(counts.size());
  for (const auto& [v, c] : counts) {
    ranked.emplace_back(&v, c);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
  Codebook cb;
  cb.dim = samples.front().size();
  for (std::size_t j = 0; j < ranked.size() && j < max_k; ++j) {
    cb.codewords.push_back(*ranked[j].first);
  }
  return cb;
}

}  // namespace atomprior::tok
