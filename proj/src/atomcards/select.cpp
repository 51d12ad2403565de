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
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "atomprior/atomcards.hpp"

namespace atomprior::cards {

bool is_heteroatom(const mol::Atom& a) {
  switch (a.atomic_number) {
    case 7:
    case 8:
    case 9:
    case 15:
    case 16:
    case 17:
    case 35:
    case 53:
      return true;
    default:
      return false;
  }
}

namespace {

void check_aligned(const mol::Molecule& mol, const std::vector<desc::AtomAttributes>& attrs) {
  if (attrs.size() != mol.num_atoms()) {
    throw std::invalid_argument("atom attributes do not match atom count");
  }
}

//! Multi-source BFS bond distance to the nearest heteroatom; -1 when none is reachable.
std::vector<int> hetero_distance(const mol::Molecule& mol) {
  std::vector<int> dist(mol.num_atoms(), -1);
  std::queue<int> q;
  for (std::size_t i = 0; i < mol.num_atoms(); ++i) {
    if (is_heteroatom(mol.atoms[i])) {
      dist[i] = 0;
      q.push(static_cast<int>(i));
    }
  }
  while (!q.empty()) {
    const int a = q.front();
    q.pop();
    for (const auto& nb : mol.neighbors(a)) {
      if (dist[static_cast<std::size_t>(nb.atom)] < 0) {
        dist[static_cast<std::size_t>(nb.atom)] = dist[static_cast<std::size_t>(a)] + 1;
        q.push(nb.atom);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<bool> must_keep(const mol::Molecule& mol, const std::vector<desc::AtomAttributes>& attrs) {
  check_aligned(mol, attrs);
  std::vector<bool> keep(mol.num_atoms(), false);
  for (std::size_t i = 0; i < mol.num_atoms(); ++i) {
    const mol::Atom& a = mol.atoms[i];
    const desc::AtomAttributes& at = attrs[i];
    keep[i] = at.is_hbd || at.is_hba || a.formal_charge != 0 || std::abs(at.gasteiger_charge) >= kChargeThreshold ||
              is_heteroatom(a) || a.ring_count >= 2 || (a.atomic_number == 6 && a.aromatic);
  }
  return keep;
}

std::vector<int> select_functional_atoms(const mol::Molecule& mol, const std::vector<desc::AtomAttributes>& attrs,
                                         std::size_t budget) {
  const std::vector<bool> keep = must_keep(mol, attrs);
  std::vector<int> kept;
  std::vector<int> rest;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    (keep[i] ? kept : rest).push_back(static_cast<int>(i));
  }

  if (kept.size() > budget) {
    std::stable_sort(kept.begin(), kept.end(), [&](int x, int y) {
      const double qx = std::abs(attrs[static_cast<std::size_t>(x)].gasteiger_charge);
      const double qy = std::abs(attrs[static_cast<std::size_t>(y)].gasteiger_charge);
      if (qx != qy) {
        return qx > qy;
      }
      const bool ax = mol.atoms[static_cast<std::size_t>(x)].aromatic;
      const bool ay = mol.atoms[static_cast<std::size_t>(y)].aromatic;
      if (ax != ay) {
        return ax;
      }
      return x < y;
    });
    kept.resize(budget);
    return kept;
  }

  const std::vector<int> dist = hetero_distance(mol);
  auto key = [&](int i) {
    const mol::Atom& a = mol.atoms[static_cast<std::size_t>(i)];
    const int d = dist[static_cast<std::size_t>(i)];
    const double proximity = d < 0 ? 0.0 : 1.0 / (1.0 + d);
    const bool sp_sp2 = a.hybridization == mol::Hybridization::SP || a.hybridization == mol::Hybridization::SP2;
    return std::make_tuple(a.aromatic || a.conjugated, a.in_ring, a.env_type == mol::EnvType::FusedRing, proximity,
                           sp_sp2);
  };
  std::stable_sort(rest.begin(), rest.end(), [&](int x, int y) {
    const auto kx = key(x);
    const auto ky = key(y);
    if (kx != ky) {
      return kx > ky;
    }
    return x < y;
  });
  for (int i : rest) {
    if (kept.size() >= budget) {
      break;
    }
    kept.push_back(i);
  }
  return kept;
}

}  // namespace atomprior::cards
