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

#include "atomprior/descriptors.hpp"

namespace atomprior::desc {
namespace {

bool pyrrole_type(const mol::Molecule& mol, int i) {
  const mol::Atom& a = mol.atoms[i];
  return a.aromatic && a.degree + a.implicit_h >= 3;
}

// N singly bonded to an atom that carries a double bond to O, N, P or S.
bool amide_type(const mol::Molecule& mol, int i) {
  for (const auto& nb : mol.neighbors(i)) {
    if (mol.bonds[nb.bond].order != mol::BondOrder::Single) {
      continue;
    }
    for (const auto& nb2 : mol.neighbors(nb.atom)) {
      if (nb2.atom == i || mol.bonds[nb2.bond].order != mol::BondOrder::Double) {
        continue;
      }
      const int z = mol.atoms[nb2.atom].atomic_number;
      if (z == 8 || z == 7 || z == 15 || z == 16) {
        return true;
      }
    }
  }
  return false;
}

bool nitrogen_acceptor(const mol::Molecule& mol, int i) {
  const mol::Atom& a = mol.atoms[i];
  if (a.formal_charge > 0) {
    return false;
  }
  if (a.hybridization != mol::Hybridization::SP2 && a.hybridization != mol::Hybridization::SP3) {
    return false;
  }
  return !pyrrole_type(mol, i) && !amide_type(mol, i);
}

}  // namespace

HBondRoles hbond_roles(const mol::Molecule& mol) {
  const std::size_t n = mol.num_atoms();
  HBondRoles out{std::vector<bool>(n, false), std::vector<bool>(n, false)};
  for (std::size_t i = 0; i < n; ++i) {
    const mol::Atom& a = mol.atoms[i];
    const int ai = static_cast<int>(i);
    if (a.atomic_number != 7 && a.atomic_number != 8) {
      continue;
    }
    out.donor[i] = a.implicit_h > 0;
    if (a.atomic_number == 8) {
      out.acceptor[i] = !a.aromatic;
    } else {
      out.acceptor[i] = nitrogen_acceptor(mol, ai);
    }
  }
  return out;
}

}  // namespace atomprior::desc
