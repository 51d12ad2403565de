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

#include "generators.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "atomprior/hash.hpp"

namespace atomprior::testing {

namespace {

// Two attachment points: entered at the first atom, continued from the last open one.
constexpr std::array<const char*, 16> kLinkers = {
    "C",   "CC",         "N",          "O",         "S",         "C(=O)",       "C(F)",   "C(Cl)",
    "C=C", "c1ccc(cc1)", "C1CCC(CC1)", "C(=O)N",    "S(=O)(=O)", "c1cc(ncc1)",  "C(C)(C)", "C1CCN(CC1)"};

constexpr std::array<const char*, 18> kCaps = {
    "F",      "Cl",        "Br",        "O",      "N",          "C#N",        "[N+](=O)[O-]", "C(=O)O",   "c1ccccc1",
    "c1ccncc1", "[NH3+]",  "C(=O)[O-]", "c1ccc2ccccc2c1", "c1cc[nH]c1", "C",   "OC",           "C(F)(F)F", "c1ccoc1"};

}  // namespace

std::string random_smiles(std::mt19937_64& rng) {
  for (;;) {
    std::uniform_int_distribution<int> len(1, 7);
    std::uniform_int_distribution<std::size_t> link(0, kLinkers.size() - 1);
    std::uniform_int_distribution<std::size_t> cap(0, kCaps.size() - 1);
    std::bernoulli_distribution branch(0.3);
    std::string s = kCaps[cap(rng)];
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      s += kLinkers[link(rng)];
      if (branch(rng)) {
        s += std::string("(") + kCaps[cap(rng)] + ")";
      }
    }
    s += kCaps[cap(rng)];
    if (mol::try_parse_smiles(s)) {
      return s;
    }
  }
}

std::vector<std::string> random_smiles_set(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  out.reserve(n);
  while (out.size() < n) {
    out.push_back(random_smiles(rng));
  }
  return out;
}

retrieval::Fingerprint random_fingerprint(std::size_t nbits, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution on(density);
  retrieval::Fingerprint fp(nbits);
  for (std::size_t b = 0; b < nbits; ++b) {
    if (on(rng)) {
      fp.set(b);
    }
  }
  return fp;
}

std::vector<int> toy_tokens(const mol::Molecule& m, int vocab) {
  std::vector<int> out;
  out.reserve(m.num_atoms());
  for (std::size_t i = 0; i < m.num_atoms(); ++i) {
    const auto& a = m.atoms[i];
    std::uint64_t h = static_cast<std::uint64_t>(a.atomic_number);
    hash_combine(h, a.aromatic ? 1 : 0);
    hash_combine(h, static_cast<std::uint64_t>(std::min(a.degree, 3)));
    out.push_back(static_cast<int>(h % static_cast<std::uint64_t>(vocab)));
  }
  return out;
}

std::vector<ToyItem> toy_corpus(std::size_t n, std::uint64_t seed, int vocab) {
  std::vector<ToyItem> out;
  for (const auto& s : random_smiles_set(n, seed)) {
    ToyItem item;
    item.mol = mol::parse_smiles(s);
    item.attrs = desc::atom_attributes(item.mol);
    item.tokens = toy_tokens(item.mol, vocab);
    out.push_back(std::move(item));
  }
  return out;
}

std::string data_path(const std::string& relative) { return std::string(ATOMPRIOR_TEST_DATA_DIR) + "/" + relative; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace atomprior::testing
