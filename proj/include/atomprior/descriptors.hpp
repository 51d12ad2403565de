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

#include <string>
#include <vector>

#include "atomprior/molgraph.hpp"

namespace atomprior::desc {

struct AtomAttributes {
  double gasteiger_charge = 0.0;
  double tpsa_contrib = 0.0;
  bool is_hbd = false;
  bool is_hba = false;
  bool aromatic = false;
  bool conjugated = false;
  bool in_ring = false;
  int degree = 0;
  int smallest_ring_size = 0;
  mol::Hybridization hybridization = mol::Hybridization::Other;
  int hetero_neighbors_r1 = 0;
  int formal_charge = 0;
  int inductive_sign = 0;
  int resonance_sign = 0;
  mol::EnvType env_type = mol::EnvType::Chain;
  std::string symbol;
};

struct MoleculeDescriptors {
  double TPSA = 0.0;
  double LogP = 0.0;
  double MolWt = 0.0;
  int HBA = 0;
  int HBD = 0;
  int NumAromaticRings = 0;
  int NumRotatableBonds = 0;
  int NumHeteroatoms = 0;
  int FormalCharge = 0;
};

//! Names of the nine molecule-level descriptors, in canonical order.
const std::vector<std::string>& molecule_descriptor_names();
//! Numeric value of a named descriptor; throws std::out_of_range for unknown names.
double descriptor_value(const MoleculeDescriptors& d, const std::string& name);

struct GasteigerResult {
  std::vector<double> charges;
  //! Charge carried by the implicit hydrogens of each heavy atom (total per atom).
  std::vector<double> hydrogen_charges;
  //! Atoms with no parameters; they keep their formal charge and do not exchange charge.
  std::vector<int> missing_parameters;
};

GasteigerResult gasteiger_charges(const mol::Molecule& mol, int iterations = 12);

struct TpsaResult {
  std::vector<double> contributions;
  //! Polar atoms that fell back to the generic formula.
  std::vector<int> fallback_atoms;
};

//! Ertl contributions for N and O; include_s_p adds the extended sulfur/phosphorus table.
TpsaResult tpsa_contributions(const mol::Molecule& mol, bool include_s_p = false);

struct HBondRoles {
  std::vector<bool> donor;
  std::vector<bool> acceptor;
};

HBondRoles hbond_roles(const mol::Molecule& mol);

//! Wildman-Crippen per-atom contributions, implicit hydrogens folded into their heavy atom.
std::vector<double> crippen_contributions(const mol::Molecule& mol);

double molecular_weight(const mol::Molecule& mol);

std::vector<AtomAttributes> atom_attributes(const mol::Molecule& mol);

MoleculeDescriptors molecule_descriptors(const mol::Molecule& mol, const std::vector<AtomAttributes>& attrs);
MoleculeDescriptors molecule_descriptors(const mol::Molecule& mol);

}  // namespace atomprior::desc
