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
#include <numeric>

#include "atomprior/hash.hpp"
#include "atomprior/molgraph.hpp"

namespace atomprior::mol {

std::string_view to_string(Hybridization h) {
  switch (h) {
    case Hybridization::S:
      return "s";
    case Hybridization::SP:
      return "sp";
    case Hybridization::SP2:
      return "sp2";
    case Hybridization::SP3:
      return "sp3";
    case Hybridization::SP3D:
      return "sp3d";
    case Hybridization::SP3D2:
      return "sp3d2";
    case Hybridization::Other:
      return "other";
  }
  return "other";
}

std::string_view to_string(EnvType e) {
  switch (e) {
    case EnvType::Chain:
      return "chain";
    case EnvType::Ring:
      return "ring";
    case EnvType::FusedRing:
      return "fused_ring";
  }
  return "chain";
}

std::string_view to_string(BondOrder o) {
  switch (o) {
    case BondOrder::Single:
      return "single";
    case BondOrder::Double:
      return "double";
    case BondOrder::Triple:
      return "triple";
    case BondOrder::Aromatic:
      return "aromatic";
  }
  return "single";
}

std::string_view to_string(SmilesErrorKind kind) {
  switch (kind) {
    case SmilesErrorKind::EmptyInput:
      return "EmptyInput";
    case SmilesErrorKind::UnbalancedRingClosure:
      return "UnbalancedRingClosure";
    case SmilesErrorKind::UnbalancedBracket:
      return "UnbalancedBracket";
    case SmilesErrorKind::UnbalancedParen:
      return "UnbalancedParen";
    case SmilesErrorKind::UnknownElement:
      return "UnknownElement";
    case SmilesErrorKind::ValenceViolation:
      return "ValenceViolation";
    case SmilesErrorKind::KekulizationFailure:
      return "KekulizationFailure";
    case SmilesErrorKind::Syntax:
      return "Syntax";
  }
  return "Syntax";
}

SmilesError::SmilesError(SmilesErrorKind kind, std::size_t offset, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " at offset " + std::to_string(offset) + ": " + detail),
      kind_(kind),
      offset_(offset) {}

int Molecule::bond_between(int a, int b) const {
  for (const auto& n : neighbors(a)) {
    if (n.atom == b) {
      return n.bond;
    }
  }
  return -1;
}

int Molecule::total_valence(int atom) const {
  int v = atoms[atom].implicit_h;
  for (const auto& n : neighbors(atom)) {
    v += bonds[n.bond].kekule_order;
  }
  return v;
}

int Molecule::num_components() const {
  std::vector<int> parent(atoms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int comps = static_cast<int>(atoms.size());
  for (const auto& b : bonds) {
    int ra = find(b.a);
    int rb = find(b.b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps;
}

void Molecule::rebuild_adjacency() {
  adjacency_.assign(atoms.size(), {});
  for (std::size_t i = 0; i < bonds.size(); ++i) {
    adjacency_[bonds[i].a].push_back({bonds[i].b, static_cast<int>(i)});
    adjacency_[bonds[i].b].push_back({bonds[i].a, static_cast<int>(i)});
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    atoms[i].degree = static_cast<int>(adjacency_[i].size());
  }
}

std::vector<std::uint64_t> invariant_multiset(const Molecule& mol, int iterations) {
  const std::size_t n = mol.num_atoms();
  std::vector<std::uint64_t> cur(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Atom& a = mol.atoms[i];
    std::uint64_t h = 17;
    hash_combine(h, static_cast<std::uint64_t>(a.atomic_number));
    hash_combine(h, static_cast<std::uint64_t>(a.formal_charge + 16));
    hash_combine(h, static_cast<std::uint64_t>(a.degree));
    hash_combine(h, static_cast<std::uint64_t>(a.implicit_h));
    hash_combine(h, a.aromatic ? 1U : 0U);
    hash_combine(h, a.in_ring ? 1U : 0U);
    hash_combine(h, static_cast<std::uint64_t>(a.isotope));
    cur[i] = h;
  }
  std::vector<std::uint64_t> out(cur);
  std::vector<std::uint64_t> next(n);
  std::vector<std::pair<int, std::uint64_t>> nb;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      nb.clear();
      for (const auto& e : mol.neighbors(static_cast<int>(i))) {
        nb.emplace_back(static_cast<int>(mol.bonds[e.bond].order), cur[e.atom]);
      }
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = cur[i];
      for (const auto& [o, v] : nb) {
        hash_combine(h, static_cast<std::uint64_t>(o));
        hash_combine(h, v);
      }
      next[i] = h;
    }
    cur.swap(next);
    out.insert(out.end(), cur.begin(), cur.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace atomprior::mol
