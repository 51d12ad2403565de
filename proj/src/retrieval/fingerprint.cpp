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
#include <bit>
#include <set>

#include "atomprior/hash.hpp"
#include "atomprior/retrieval.hpp"

namespace atomprior::retrieval {

WidthMismatch::WidthMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("fingerprint width mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

Fingerprint::Fingerprint(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0ULL) {}

Fingerprint Fingerprint::from_bits(std::size_t nbits, const std::vector<int>& on_bits) {
  Fingerprint fp(nbits);
  for (int b : on_bits) {
    if (b < 0 || static_cast<std::size_t>(b) >= nbits) {
      throw std::out_of_range("fingerprint bit " + std::to_string(b) + " outside width " + std::to_string(nbits));
    }
    fp.set(static_cast<std::size_t>(b));
  }
  return fp;
}

void Fingerprint::set(std::size_t bit) {
  std::uint64_t& w = words_[bit / 64];
  const std::uint64_t mask = 1ULL << (bit % 64);
  if ((w & mask) == 0) {
    w |= mask;
    ++popcount_;
  }
}

bool Fingerprint::test(std::size_t bit) const { return ((words_[bit / 64] >> (bit % 64)) & 1ULL) != 0; }

std::vector<int> Fingerprint::on_bits() const {
  std::vector<int> out;
  out.reserve(popcount_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t x = words_[w];
    while (x != 0) {
      out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
      x &= x - 1;
    }
  }
  return out;
}

double tanimoto(const Fingerprint& a, const Fingerprint& b) {
  if (a.nbits() != b.nbits()) {
    throw WidthMismatch(a.nbits(), b.nbits());
  }
  std::size_t inter = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    inter += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  }
  const std::size_t uni = a.popcount() + b.popcount() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

namespace {

using BondSet = std::vector<std::uint64_t>;

void set_bit(BondSet& s, int b) { s[static_cast<std::size_t>(b) / 64] |= 1ULL << (static_cast<std::size_t>(b) % 64); }

void unite(BondSet& into, const BondSet& from) {
  for (std::size_t i = 0; i < into.size(); ++i) {
    into[i] |= from[i];
  }
}

std::uint64_t initial_invariant(const mol::Atom& a) {
  std::uint64_t h = 0x6d6f7267616eULL;
  hash_combine(h, static_cast<std::uint64_t>(a.atomic_number));
  hash_combine(h, static_cast<std::uint64_t>(a.degree));
  hash_combine(h, static_cast<std::uint64_t>(a.implicit_h));
  hash_combine(h, static_cast<std::uint64_t>(a.formal_charge + 16));
  hash_combine(h, static_cast<std::uint64_t>(a.isotope));
  hash_combine(h, a.in_ring ? 1U : 0U);
  return h;
}

}  // namespace

Fingerprint morgan_fingerprint(const mol::Molecule& mol, int radius, std::size_t nbits) {
  if (nbits == 0) {
    throw std::invalid_argument("fingerprint width must be positive");
  }
  Fingerprint fp(nbits);
  const std::size_t n = mol.num_atoms();
  const std::size_t words = (mol.num_bonds() + 63) / 64 + 1;
  std::vector<std::uint64_t> ids(n);
  std::vector<BondSet> env(n, BondSet(words, 0ULL));
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = initial_invariant(mol.atoms[i]);
    fp.set(ids[i] % nbits);
  }
  std::set<BondSet> seen;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nbrs;
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::uint64_t> next(n);
    std::vector<BondSet> next_env = env;
    for (std::size_t i = 0; i < n; ++i) {
      nbrs.clear();
      for (const auto& nb : mol.neighbors(static_cast<int>(i))) {
        nbrs.emplace_back(static_cast<std::uint64_t>(mol.bonds[nb.bond].order) + 1, ids[nb.atom]);
        set_bit(next_env[i], nb.bond);
        unite(next_env[i], env[nb.atom]);
      }
      std::sort(nbrs.begin(), nbrs.end());
      std::uint64_t h = static_cast<std::uint64_t>(r);
      hash_combine(h, ids[i]);
      for (const auto& [order, id] : nbrs) {
        hash_combine(h, order);
        hash_combine(h, id);
      }
      next[i] = h;
    }
    // Within a layer, the atom with the smaller hash claims a shared bond set.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return next[x] < next[y]; });
    for (std::size_t i : order) {
      const bool empty = std::all_of(next_env[i].begin(), next_env[i].end(), [](std::uint64_t w) { return w == 0; });
      if (empty || !seen.insert(next_env[i]).second) {
        continue;
      }
      fp.set(next[i] % nbits);
    }
    ids.swap(next);
    env.swap(next_env);
  }
  return fp;
}

}  // namespace atomprior::retrieval
