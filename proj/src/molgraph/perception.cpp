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
#include <set>

#include "atomprior/molgraph.hpp"

namespace atomprior::mol {
namespace {

bool is_electronegative(int z) { return z == 7 || z == 8 || z == 16 || z == 34; }

// Pi electrons an atom donates to a ring, from its Kekule form. -1 means it cannot be aromatic.
int pi_electrons(const Molecule& mol, int i) {
  const Atom& a = mol.atoms[i];
  bool ring_double = false;
  int exo_double_partner = -1;
  int exo_doubles = 0;
  for (const auto& nb : mol.neighbors(i)) {
    const Bond& b = mol.bonds[nb.bond];
    if (b.kekule_order == 3) {
      return -1;
    }
    if (b.kekule_order == 2) {
      if (b.in_ring) {
        ring_double = true;
      } else {
        exo_double_partner = nb.atom;
        ++exo_doubles;
      }
    }
  }
  if (ring_double) {
    return 1;
  }
  if (exo_doubles > 0) {
    // Only a carbonyl-type carbon (one exocyclic double to N/O/S) sits in a ring with zero electrons.
    const bool ok = a.atomic_number == 6 && exo_doubles == 1 &&
                    is_electronegative(mol.atoms[exo_double_partner].atomic_number);
    return ok ? 0 : -1;
  }
  const int tv = mol.total_valence(i);
  const int z = a.atomic_number;
  const int q = a.formal_charge;
  if (q == 0 && (z == 7 || z == 15 || z == 33) && tv == 3) {
    return 2;
  }
  if (q == 0 && (z == 8 || z == 16 || z == 34 || z == 52) && tv == 2) {
    return 2;
  }
  if (q == -1 && z == 6 && tv == 3) {
    return 2;
  }
  if (q == -1 && z == 7 && tv == 2) {
    return 2;
  }
  if (q == 1 && z == 6 && tv == 3) {
    return 0;
  }
  if (q == 0 && z == 5 && tv == 3) {
    return 0;
  }
  return -1;
}

bool huckel(const std::vector<int>& pi, const std::vector<int>& atoms) {
  int total = 0;
  for (int v : atoms) {
    if (pi[v] < 0) {
      return false;
    }
    total += pi[v];
  }
  return total % 4 == 2;
}

std::vector<int> ring_bonds(const Molecule& mol, const std::vector<int>& ring) {
  std::vector<int> out;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    out.push_back(mol.bond_between(ring[k], ring[(k + 1) % ring.size()]));
  }
  return out;
}

}  // namespace

void perceive_aromaticity(Molecule& mol) {
  const std::size_t n = mol.num_atoms();
  std::vector<int> pi(n);
  for (std::size_t i = 0; i < n; ++i) {
    pi[i] = pi_electrons(mol, static_cast<int>(i));
  }
  std::vector<std::vector<int>> rbonds;
  for (const auto& r : mol.rings) {
    rbonds.push_back(ring_bonds(mol, r));
  }
  std::vector<bool> arom_bond(mol.num_bonds(), false);
  auto mark = [&](const std::vector<int>& atoms, const std::vector<int>& bonds) {
    for (int v : atoms) {
      mol.atoms[v].aromatic = true;
    }
    for (int b : bonds) {
      arom_bond[b] = true;
    }
  };
  for (std::size_t r = 0; r < mol.rings.size(); ++r) {
    if (huckel(pi, mol.rings[r])) {
      mark(mol.rings[r], rbonds[r]);
    }
  }
  // Fused pairs: the envelope of two rings sharing a bond.
  for (std::size_t r = 0; r < mol.rings.size(); ++r) {
    for (std::size_t s = r + 1; s < mol.rings.size(); ++s) {
      std::set<int> br(rbonds[r].begin(), rbonds[r].end());
      bool shared = std::any_of(rbonds[s].begin(), rbonds[s].end(), [&](int b) { return br.count(b) > 0; });
      if (!shared) {
        continue;
      }
      std::set<int> atoms(mol.rings[r].begin(), mol.rings[r].end());
      atoms.insert(mol.rings[s].begin(), mol.rings[s].end());
      std::vector<int> av(atoms.begin(), atoms.end());
      const bool all_marked = std::all_of(rbonds[r].begin(), rbonds[r].end(), [&](int b) { return arom_bond[b]; }) &&
                              std::all_of(rbonds[s].begin(), rbonds[s].end(), [&](int b) { return arom_bond[b]; });
      if (all_marked || !huckel(pi, av)) {
        continue;
      }
      std::vector<int> bonds;
      std::set<int> bs(rbonds[s].begin(), rbonds[s].end());
      for (int b : rbonds[r]) {
        if (bs.count(b) == 0) {
          bonds.push_back(b);
        }
      }
      for (int b : rbonds[s]) {
        if (br.count(b) == 0) {
          bonds.push_back(b);
        }
      }
      mark(av, bonds);
    }
  }
  for (std::size_t b = 0; b < mol.num_bonds(); ++b) {
    Bond& bond = mol.bonds[b];
    if (arom_bond[b] && mol.atoms[bond.a].aromatic && mol.atoms[bond.b].aromatic) {
      bond.order = BondOrder::Aromatic;
    }
  }
}

namespace {

bool conj_candidate(const Atom& a) {
  return a.aromatic || a.atomic_number == 6 || a.atomic_number == 7 || a.atomic_number == 8;
}

bool is_multiple(const Bond& b) { return b.order == BondOrder::Aromatic || b.kekule_order >= 2; }

}  // namespace

void perceive_conjugation(Molecule& mol) {
  for (auto& b : mol.bonds) {
    b.conjugated = b.order == BondOrder::Aromatic;
  }
  for (std::size_t i = 0; i < mol.num_atoms(); ++i) {
    const int ai = static_cast<int>(i);
    const Atom& at = mol.atoms[i];
    if (!conj_candidate(at)) {
      continue;
    }
    const int sbo = mol.total_degree(ai);
    if (sbo < 2 || sbo > 3) {
      continue;
    }
    for (const auto& n1 : mol.neighbors(ai)) {
      if (!is_multiple(mol.bonds[n1.bond])) {
        continue;
      }
      for (const auto& n2 : mol.neighbors(ai)) {
        if (n2.bond == n1.bond) {
          continue;
        }
        const Atom& at2 = mol.atoms[n2.atom];
        if (mol.total_degree(n2.atom) > 3 || !conj_candidate(at2)) {
          continue;
        }
        mol.bonds[n1.bond].conjugated = true;
        mol.bonds[n2.bond].conjugated = true;
      }
    }
  }
  for (auto& a : mol.atoms) {
    a.conjugated = false;
  }
  for (const auto& b : mol.bonds) {
    if (b.conjugated) {
      mol.atoms[b.a].conjugated = true;
      mol.atoms[b.b].conjugated = true;
    }
  }
}

void perceive_hybridization(Molecule& mol) {
  for (std::size_t i = 0; i < mol.num_atoms(); ++i) {
    const int ai = static_cast<int>(i);
    Atom& a = mol.atoms[i];
    const int deg = mol.total_degree(ai);
    if (a.atomic_number <= 1) {
      a.hybridization = deg <= 1 ? Hybridization::S : Hybridization::Other;
      continue;
    }
    if (a.degree > 4) {
      a.hybridization = a.degree == 5 ? Hybridization::SP3D : (a.degree == 6 ? Hybridization::SP3D2 : Hybridization::Other);
      continue;
    }
    const int nouter = element_by_number(a.atomic_number).outer_electrons;
    const int tv = mol.total_valence(ai);
    const int free_e = std::max(0, nouter - (tv + a.formal_charge));
    const int lone_pairs = free_e / 2;
    const int norbs = deg + lone_pairs;
    switch (norbs) {
      case 0:
      case 1:
        a.hybridization = Hybridization::S;
        break;
      case 2:
        a.hybridization = Hybridization::SP;
        break;
      case 3:
        a.hybridization = Hybridization::SP2;
        break;
      case 4:
        a.hybridization = (deg < 4 && a.conjugated) ? Hybridization::SP2 : Hybridization::SP3;
        break;
      case 5:
        a.hybridization = Hybridization::SP3D;
        break;
      case 6:
        a.hybridization = Hybridization::SP3D2;
        break;
      default:
        a.hybridization = Hybridization::Other;
    }
  }
}

namespace {

bool has_triple(const Molecule& mol, int i) {
  for (const auto& nb : mol.neighbors(i)) {
    if (mol.bonds[nb.bond].kekule_order == 3 && mol.bonds[nb.bond].order != BondOrder::Aromatic) {
      return true;
    }
  }
  return false;
}

// CX3 with three identical halogens or three methyls.
bool is_symmetric_top(const Molecule& mol, int i) {
  const Atom& a = mol.atoms[i];
  if (a.atomic_number != 6) {
    return false;
  }
  int hal[3] = {0, 0, 0};
  int methyl = 0;
  for (const auto& nb : mol.neighbors(i)) {
    const Atom& x = mol.atoms[nb.atom];
    if (x.atomic_number == 9) {
      ++hal[0];
    } else if (x.atomic_number == 17) {
      ++hal[1];
    } else if (x.atomic_number == 35) {
      ++hal[2];
    } else if (x.atomic_number == 6 && x.implicit_h == 3 && !x.aromatic && mol.bonds[nb.bond].kekule_order == 1) {
      ++methyl;
    }
  }
  return hal[0] >= 3 || hal[1] >= 3 || hal[2] >= 3 || methyl >= 3;
}

// [CD3](=[N,O,S]) or, with nplus, [CD3](=[N+]).
bool is_thio_carbonyl_like(const Molecule& mol, int i, bool nplus) {
  const Atom& a = mol.atoms[i];
  if (a.atomic_number != 6 || a.aromatic || a.degree != 3) {
    return false;
  }
  for (const auto& nb : mol.neighbors(i)) {
    const Bond& b = mol.bonds[nb.bond];
    if (b.order != BondOrder::Double) {
      continue;
    }
    const Atom& x = mol.atoms[nb.atom];
    if (nplus) {
      if (x.atomic_number == 7 && x.formal_charge == 1) {
        return true;
      }
    } else if (!x.aromatic && (x.atomic_number == 7 || x.atomic_number == 8 || x.atomic_number == 16)) {
      return true;
    }
  }
  return false;
}

bool amide_hetero(const Atom& xa) {
  return xa.atomic_number == 7 || (!xa.aromatic && xa.atomic_number == 8) ||
         (!xa.aromatic && xa.atomic_number == 16 && xa.degree != 1);
}

bool amide_pair(const Molecule& mol, int c, int x) {
  const Atom& xa = mol.atoms[x];
  if (amide_hetero(xa) && is_thio_carbonyl_like(mol, c, false)) {
    return true;
  }
  return xa.atomic_number == 7 && xa.degree != 1 && is_thio_carbonyl_like(mol, c, true);
}

// Atom sits on either side of a non-ring single C(=X)-[N,O,S] link.
bool amide_atom(const Molecule& mol, int i) {
  for (const auto& nb : mol.neighbors(i)) {
    const Bond& b = mol.bonds[nb.bond];
    if (b.order != BondOrder::Single || b.in_ring) {
      continue;
    }
    if (amide_pair(mol, i, nb.atom) || amide_pair(mol, nb.atom, i)) {
      return true;
    }
  }
  return false;
}

}  // namespace

void perceive_rotatable(Molecule& mol) {
  for (auto& b : mol.bonds) {
    b.rotatable = false;
    if (b.order != BondOrder::Single || b.in_ring) {
      continue;
    }
    const int x = b.a;
    const int y = b.b;
    if (mol.atoms[x].degree < 2 || mol.atoms[y].degree < 2) {
      continue;
    }
    if (has_triple(mol, x) || has_triple(mol, y)) {
      continue;
    }
    if (is_symmetric_top(mol, x) || is_symmetric_top(mol, y)) {
      continue;
    }
    if (amide_atom(mol, x) && amide_atom(mol, y)) {
      continue;
    }
    b.rotatable = true;
  }
}

}  // namespace atomprior::mol
