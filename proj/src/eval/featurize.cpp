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

#include "atomprior/eval.hpp"

namespace atomprior::eval {
namespace {

Featurized featurize_one(const std::string& smiles, const tok::EmbeddingProvider& embed,
                         const tok::Codebook& codebook, const FeaturizeOptions& opts) {
  Featurized f;
  try {
    f.mol = mol::parse_smiles(smiles);
    f.attrs = desc::atom_attributes(f.mol);
    f.descriptors = desc::molecule_descriptors(f.mol, f.attrs);
    f.tokens = tok::tokenize(f.mol, embed, codebook).tokens;
    f.fingerprint = retrieval::morgan_fingerprint(f.mol, opts.radius, opts.nbits);
    f.ok = true;
  } catch (const std::exception& e) {
    f = Featurized{};
    f.error = e.what();
  }
  return f;
}

}  // namespace

std::vector<Featurized> featurize(const std::vector<std::string>& smiles, const tok::EmbeddingProvider& embed,
                                  const tok::Codebook& codebook, const FeaturizeOptions& opts) {
  std::vector<Featurized> out(smiles.size());
  const auto n = static_cast<std::ptrdiff_t>(smiles.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = featurize_one(smiles[static_cast<std::size_t>(i)], embed, codebook, opts);
  }
  return out;
}

std::vector<Featurized> featurize_serial(const std::vector<std::string>& smiles, const tok::EmbeddingProvider& embed,
                                         const tok::Codebook& codebook, const FeaturizeOptions& opts) {
  std::vector<Featurized> out;
  out.reserve(smiles.size());
  for (const auto& s : smiles) {
    out.push_back(featurize_one(s, embed, codebook, opts));
  }
  return out;
}

retrieval::AnalogueIndex build_index(const std::vector<const Featurized*>& items, const std::vector<std::string>& smiles,
                                     const std::vector<double>& labels, retrieval::LabelKind kind,
                                     const FeaturizeOptions& opts) {
  if (items.size() != smiles.size() || items.size() != labels.size()) {
    throw LengthMismatch("build_index: items, smiles and labels differ in length");
  }
  retrieval::AnalogueIndex index;
  index.kind = kind;
  index.radius = opts.radius;
  index.nbits = opts.nbits;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Featurized& f = *items[i];
    if (!f.ok) {
      continue;
    }
    index.entries.push_back({smiles[i], f.fingerprint, labels[i], f.tokens, f.descriptors});
  }
  return index;
}

}  // namespace atomprior::eval
