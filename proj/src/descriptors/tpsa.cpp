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

#include "atomprior/descriptors.hpp"

namespace atomprior::desc {
namespace {

struct Env {
  int nbrs = 0;
  int h = 0;
  int charge = 0;
  int single = 0;
  int dbl = 0;
  int triple = 0;
  int arom = 0;
  bool in3 = false;
};

Env environment(const mol::Molecule& mol, int i) {
  Env e;
  const mol::Atom& a = mol.atoms[i];
  e.nbrs = a.degree;
  e.h = a.implicit_h;
  e.charge = a.formal_charge;
  for (const auto& nb : mol.neighbors(i)) {
    switch (mol.bonds[nb.bond].order) {
      case mol::BondOrder::Single:
        ++e.single;
        break;
      case mol::BondOrder::Double:
        ++e.dbl;
        break;
      case mol::BondOrder::Triple:
        ++e.triple;
        break;
      case mol::BondOrder::Aromatic:
        ++e.arom;
        break;
    }
  }
  for (const auto& r : mol.rings) {
    if (r.size() == 3 && std::find(r.begin(), r.end(), i) != r.end()) {
      e.in3 = true;
    }
  }
  return e;
}

double nitrogen(const Env& e) {
  switch (e.nbrs) {
    case 1:
      if (e.h == 0 && e.charge == 0 && e.triple == 1) return 23.79;
      if (e.h == 1 && e.charge == 0 && e.dbl == 1) return 23.85;
      if (e.h == 2 && e.charge == 0 && e.single == 1) return 26.02;
      if (e.h == 2 && e.charge == 1 && e.dbl == 1) return 25.59;
      if (e.h == 3 && e.charge == 1 && e.single == 1) return 27.64;
      break;
    case 2:
      if (e.h == 0 && e.charge == 0 && e.single == 1 && e.dbl == 1) return 12.36;
      if (e.h == 0 && e.charge == 0 && e.triple == 1 && e.dbl == 1) return 13.60;
      if (e.h == 1 && e.charge == 0 && e.single == 2 && e.in3) return 21.94;
      if (e.h == 1 && e.charge == 0 && e.single == 2 && !e.in3) return 12.03;
      if (e.h == 0 && e.charge == 1 && e.triple == 1 && e.single == 1) return 4.36;
      if (e.h == 1 && e.charge == 1 && e.dbl == 1 && e.single == 1) return 13.97;
      if (e.h == 2 && e.charge == 1 && e.single == 2) return 16.61;
      if (e.h == 0 && e.charge == 0 && e.arom == 2) return 12.89;
      if (e.h == 1 && e.charge == 0 && e.arom == 2) return 15.79;
      if (e.h == 1 && e.charge == 1 && e.arom == 2) return 14.14;
      break;
    case 3:
      if (e.h == 0 && e.charge == 0 && e.single == 3 && e.in3) return 3.01;
      if (e.h == 0 && e.charge == 0 && e.single == 3 && !e.in3) return 3.24;
      if (e.h == 0 && e.charge == 0 && e.single == 1 && e.dbl == 2) return 11.68;
      if (e.h == 0 && e.charge == 1 && e.single == 2 && e.dbl == 1) return 3.01;
      if (e.h == 1 && e.charge == 1 && e.single == 3) return 4.44;
      if (e.h == 0 && e.charge == 0 && e.arom == 3) return 4.41;
      if (e.h == 0 && e.charge == 0 && e.single == 1 && e.arom == 2) return 4.93;
      if (e.h == 0 && e.charge == 0 && e.dbl == 1 && e.arom == 2) return 8.39;
      if (e.h == 0 && e.charge == 1 && e.arom == 3) return 4.10;
      if (e.h == 0 && e.charge == 1 && e.single == 1 && e.arom == 2) return 3.88;
      break;
    case 4:
      if (e.h == 0 && e.single == 4 && e.charge == 1) return 0.0;
      break;
    default:
      break;
  }
  return -1.0;
}

double oxygen(const Env& e) {
  switch (e.nbrs) {
    case 1:
      if (e.h == 0 && e.charge == 0 && e.dbl == 1) return 17.07;
      if (e.h == 1 && e.charge == 0 && e.single == 1) return 20.23;
      if (e.h == 0 && e.charge == -1 && e.single == 1) return 23.06;
      break;
    case 2:
      if (e.h == 0 && e.charge == 0 && e.single == 2 && e.in3) return 12.53;
      if (e.h == 0 && e.charge == 0 && e.single == 2 && !e.in3) return 9.23;
      if (e.h == 0 && e.charge == 0 && e.arom == 2) return 13.14;
      break;
    default:
      break;
  }
  return -1.0;
}

double phosphorus(const Env& e) {
  switch (e.nbrs) {
    case 2:
      if (e.h == 0 && e.charge == 0 && e.single == 1 && e.dbl == 1) return 34.14;
      break;
    case 3:
      if (e.h == 0 && e.charge == 0 && e.single == 3) return 13.59;
      if (e.h == 1 && e.charge == 0 && e.single == 2 && e.dbl == 1) return 23.47;
      break;
    case 4:
      if (e.h == 0 && e.charge == 0 && e.single == 3 && e.dbl == 1) return 9.81;
      break;
    default:
      break;
  }
  return -1.0;
}

double sulfur(const Env& e) {
  switch (e.nbrs) {
    case 1:
      if (e.h == 0 && e.charge == 0 && e.dbl == 1) return 32.09;
      if (e.h == 1 && e.charge == 0 && e.single == 1) return 38.80;
      break;
    case 2:
      if (e.h == 0 && e.charge == 0 && e.single == 2) return 25.30;
      if (e.h == 0 && e.charge == 0 && e.arom == 2) return 28.24;
      break;
    case 3:
      if (e.h == 0 && e.charge == 0 && e.arom == 2 && e.dbl == 1) return 21.70;
      if (e.h == 0 && e.charge == 0 && e.single == 2 && e.dbl == 1) return 19.21;
      break;
    case 4:
      if (e.h == 0 && e.charge == 0 && e.single == 2 && e.dbl == 2) return 8.38;
      break;
    default:
      break;
  }
  return -1.0;
}

}  // namespace

TpsaResult tpsa_contributions(const mol::Molecule& mol, bool include_s_p) {
  TpsaResult out;
  out.contributions.assign(mol.num_atoms(), 0.0);
  for (std::size_t i = 0; i < mol.num_atoms(); ++i) {
    const int z = mol.atoms[i].atomic_number;
    const bool polar = z == 7 || z == 8 || (include_s_p && (z == 15 || z == 16));
    if (!polar) {
      continue;
    }
    const Env e = environment(mol, static_cast<int>(i));
    double v = -1.0;
    switch (z) {
      case 7:
        v = nitrogen(e);
        if (v < 0.0) {
          v = std::max(0.0, 30.5 - 8.2 * e.nbrs + 1.5 * e.h);
          out.fallback_atoms.push_back(static_cast<int>(i));
        }
        break;
      case 8:
        v = oxygen(e);
        if (v < 0.0) {
          v = std::max(0.0, 28.5 - 8.6 * e.nbrs + 1.5 * e.h);
          out.fallback_atoms.push_back(static_cast<int>(i));
        }
        break;
      case 15:
        v = phosphorus(e);
        break;
      case 16:
        v = sulfur(e);
        break;
      default:
        break;
    }
    if (v < 0.0) {
      v = 0.0;
      out.fallback_atoms.push_back(static_cast<int>(i));
    }
    out.contributions[i] = v;
  }
  return out;
}

}  // namespace atomprior::desc
