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
#include <stdexcept>

#include "atomprior/descriptors.hpp"

namespace atomprior::desc {
namespace {

bool is_metal(int z) {
  static constexpr int kNonMetals[] = {0, 1, 2, 5, 6, 7, 8, 9, 10, 14, 15, 16, 17, 18, 32, 33, 34, 35, 36, 51, 52, 53, 54, 85, 86};
  return std::find(std::begin(kNonMetals), std::end(kNonMetals), z) == std::end(kNonMetals);
}

bool is_halogen(int z) { return z == 9 || z == 17 || z == 35 || z == 53; }

bool multiple_bond_to(const mol::Molecule& mol, int i, std::initializer_list<int> elements) {
  for (const auto& nb : mol.neighbors(i)) {
    const mol::BondOrder o = mol.bonds[nb.bond].order;
    if (o != mol::BondOrder::Double && o != mol::BondOrder::Triple) {
      continue;
    }
    const int z = mol.atoms[nb.atom].atomic_number;
    if (std::find(elements.begin(), elements.end(), z) != elements.end()) {
      return true;
    }
  }
  return false;
}

bool has_multiple_bond(const mol::Molecule& mol, int i) {
  for (const auto& nb : mol.neighbors(i)) {
    const mol::BondOrder o = mol.bonds[nb.bond].order;
    if (o == mol::BondOrder::Double || o == mol::BondOrder::Triple) {
      return true;
    }
  }
  return false;
}

bool is_vinyl_carbon(const mol::Molecule& mol, int i) {
  if (mol.atoms[i].atomic_number != 6) {
    return false;
  }
  for (const auto& nb : mol.neighbors(i)) {
    if (mol.bonds[nb.bond].order == mol::BondOrder::Double && mol.atoms[nb.atom].atomic_number == 6) {
      return true;
    }
  }
  return false;
}

// Inductive sign table:
//   cation -> -1, anion -> +1
//   F Cl Br I N O, and C with a multiple bond to N/O/S -> -1
//   B, Si, metals -> +1
//   everything else (alkyl C, H, S, P) -> 0
int inductive_sign(const mol::Molecule& mol, int i) {
  const mol::Atom& a = mol.atoms[i];
  if (a.formal_charge > 0) {
    return -1;
  }
  if (a.formal_charge < 0) {
    return 1;
  }
  const int z = a.atomic_number;
  if (is_halogen(z) || z == 7 || z == 8) {
    return -1;
  }
  if (z == 6) {
    return multiple_bond_to(mol, i, {7, 8, 16}) ? -1 : 0;
  }
  if (z == 5 || z == 14 || is_metal(z)) {
    return 1;
  }
  return 0;
}

// Resonance sign table:
//   +1: non-aromatic N/O/S/halogen with only single bonds, attached to an aromatic or multiply bonded atom
//   -1: atom with a multiple bond to N/O/S, attached to an aromatic atom or a C=C carbon
int resonance_sign(const mol::Molecule& mol, int i) {
  const mol::Atom& a = mol.atoms[i];
  const int z = a.atomic_number;
  const bool donor_element = z == 7 || z == 8 || z == 16 || is_halogen(z);
  if (donor_element && !a.aromatic && a.formal_charge <= 0 && !has_multiple_bond(mol, i)) {
    for (const auto& nb : mol.neighbors(i)) {
      if (mol.atoms[nb.atom].aromatic || has_multiple_bond(mol, nb.atom)) {
        return 1;
      }
    }
  }
  if (!a.aromatic && multiple_bond_to(mol, i, {7, 8, 16})) {
    for (const auto& nb : mol.neighbors(i)) {
      if (mol.bonds[nb.bond].order == mol::BondOrder::Single &&
          (mol.atoms[nb.atom].aromatic || is_vinyl_carbon(mol, nb.atom))) {
        return -1;
      }
    }
  }
  return 0;
}

bool aromatic_ring(const mol::Molecule& mol, const std::vector<int>& ring) {
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const int b = mol.bond_between(ring[k], ring[(k + 1) % ring.size()]);
    if (b < 0 || mol.bonds[b].order != mol::BondOrder::Aromatic) {
      return false;
    }
  }
  return true;
}

}  // namespace

const std::vector<std::string>& molecule_descriptor_names() {
  static const std::vector<std::string> kNames = {"TPSA",           "LogP",          "MolWt",
                                                  "HBA",            "HBD",           "NumAromaticRings",
                                                  "NumRotatableBonds", "NumHeteroatoms", "FormalCharge"};
  return kNames;
}

double descriptor_value(const MoleculeDescriptors& d, const std::string& name) {
  if (name == "TPSA") return d.TPSA;
  if (name == "LogP") return d.LogP;
  if (name == "MolWt") return d.MolWt;
  if (name == "HBA") return d.HBA;
  if (name == "HBD") return d.HBD;
  if (name == "NumAromaticRings") return d.NumAromaticRings;
  if (name == "NumRotatableBonds") return d.NumRotatableBonds;
  if (name == "NumHeteroatoms") return d.NumHeteroatoms;
  if (name == "FormalCharge") return d.FormalCharge;
  throw std::out_of_range("unknown descriptor: " + name);
}

double molecular_weight(const mol::Molecule& mol) {
  const double h = mol::element_by_number(1).weight;
  double w = 0.0;
  for (const auto& a : mol.atoms) {
    w += mol::element_by_number(a.atomic_number).weight + h * a.implicit_h;
  }
  return w;
}

std::vector<AtomAttributes> atom_attributes(const mol::Molecule& mol) {
  const std::size_t n = mol.num_atoms();
  const GasteigerResult gc = gasteiger_charges(mol);
  const TpsaResult tp = tpsa_contributions(mol);
  const HBondRoles hb = hbond_roles(mol);
  std::vector<AtomAttributes> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const mol::Atom& a = mol.atoms[i];
    const int ai = static_cast<int>(i);
    AtomAttributes& at = out[i];
    at.gasteiger_charge = gc.charges[i];
    at.tpsa_contrib = tp.contributions[i];
    at.is_hbd = hb.donor[i];
    at.is_hba = hb.acceptor[i];
    at.aromatic = a.aromatic;
    at.conjugated = a.conjugated;
    at.in_ring = a.in_ring;
    at.degree = a.degree;
    at.smallest_ring_size = a.smallest_ring_size;
    at.hybridization = a.hybridization;
    for (const auto& nb : mol.neighbors(ai)) {
      const int z = mol.atoms[nb.atom].atomic_number;
      at.hetero_neighbors_r1 += (z != 6 && z != 1) ? 1 : 0;
    }
    at.formal_charge = a.formal_charge;
    at.inductive_sign = inductive_sign(mol, ai);
    at.resonance_sign = resonance_sign(mol, ai);
    at.env_type = a.env_type;
    at.symbol = a.element;
  }
  return out;
}

MoleculeDescriptors molecule_descriptors(const mol::Molecule& mol, const std::vector<AtomAttributes>& attrs) {
  MoleculeDescriptors d;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    d.TPSA += attrs[i].tpsa_contrib;
    d.HBA += attrs[i].is_hba ? 1 : 0;
    d.HBD += attrs[i].is_hbd ? 1 : 0;
    const int z = mol.atoms[i].atomic_number;
    d.NumHeteroatoms += (z != 6 && z != 1) ? 1 : 0;
    d.FormalCharge += mol.atoms[i].formal_charge;
  }
  for (const double c : crippen_contributions(mol)) {
    d.LogP += c;
  }
  d.MolWt = molecular_weight(mol);
  for (const auto& r : mol.rings) {
    d.NumAromaticRings += aromatic_ring(mol, r) ? 1 : 0;
  }
  for (const auto& b : mol.bonds) {
    d.NumRotatableBonds += b.rotatable ? 1 : 0;
  }
  return d;
}

MoleculeDescriptors molecule_descriptors(const mol::Molecule& mol) {
  return molecule_descriptors(mol, atom_attributes(mol));
}

}  // namespace atomprior::desc
