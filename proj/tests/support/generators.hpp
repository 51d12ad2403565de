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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "atomprior/descriptors.hpp"
#include "atomprior/molgraph.hpp"
#include "atomprior/retrieval.hpp"

namespace atomprior::testing {

//! Random drug-like SMILES assembled from fragments; always parseable.
std::string random_smiles(std::mt19937_64& rng);
std::vector<std::string> random_smiles_set(std::size_t n, std::uint64_t seed);

retrieval::Fingerprint random_fingerprint(std::size_t nbits, double density, std::mt19937_64& rng);

//! Perceived molecule with attributes and a small-vocabulary token per atom.
struct ToyItem {
  mol::Molecule mol;
  std::vector<int> tokens;
  std::vector<desc::AtomAttributes> attrs;
};

//! Token = element/aromatic/degree bucket folded into vocab ids; deterministic.
std::vector<int> toy_tokens(const mol::Molecule& m, int vocab);
std::vector<ToyItem> toy_corpus(std::size_t n, std::uint64_t seed, int vocab = 12);

std::string data_path(const std::string& relative);
std::string read_file(const std::string& path);

}  // namespace atomprior::testing
