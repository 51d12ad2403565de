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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atomprior::mol {

enum class Hybridization : std::uint8_t { S, SP, SP2, SP3, SP3D, SP3D2, Other };
enum class EnvType : std::uint8_t { Chain, Ring, FusedRing };
enum class BondOrder : std::uint8_t { Single, Double, Triple, Aromatic };

std::string_view to_string(Hybridization h);
std::string_view to_string(EnvType e);
std::string_view to_string(BondOrder o);

struct Atom {
  std::string element;
  int atomic_number = 0;
  int formal_charge = 0;
  int isotope = 0;
  //! Total attached hydrogens, implicit plus folded explicit [H] atoms.
  int implicit_h = 0;
  bool aromatic = false;
  int degree = 0;
  Hybridization hybridization = Hybridization::Other;
  bool in_ring = false;
  int smallest_ring_size = 0;
  //! Number of SSSR rings containing this atom.
  int ring_count = 0;
  EnvType env_type = EnvType::Chain;
  bool conjugated = false;
  //! True when written in brackets; bracket atoms never receive implicit H.
  bool bracket = false;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
  //! Localized order 1..3 from kekulization; aromatic bonds keep their Kekule value here.
  int kekule_order = 1;
  bool conjugated = false;
  bool rotatable = false;
  bool in_ring = false;

  int other(int atom) const { return atom == a ? b : a; }
};

struct Neighbor {
  int atom;
  int bond;
};

class Molecule {
 public:
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::vector<std::vector<int>> rings;
  std::string source_smiles;

  std::size_t num_atoms() const { return atoms.size(); }
  std::size_t num_bonds() const { return bonds.size(); }

  const std::vector<Neighbor>& neighbors(int atom) const { return adjacency_[static_cast<std::size_t>(atom)]; }
  //! Bond index joining a and b, or -1.
  int bond_between(int a, int b) const;
  int total_degree(int atom) const { return atoms[atom].degree + atoms[atom].implicit_h; }
  //! Sum of Kekule bond orders plus attached hydrogens.
  int total_valence(int atom) const;
  int num_components() const;

  //! Recompute adjacency lists and degrees from the bond list.
  void rebuild_adjacency();

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
};

enum class SmilesErrorKind : std::uint8_t {
  EmptyInput,
  UnbalancedRingClosure,
  UnbalancedBracket,
  UnbalancedParen,
  UnknownElement,
  ValenceViolation,
  KekulizationFailure,
  Syntax,
};

std::string_view to_string(SmilesErrorKind kind);

class SmilesError : public std::runtime_error {
 public:
  SmilesError(SmilesErrorKind kind, std::size_t offset, const std::string& detail);
  SmilesErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  SmilesErrorKind kind_;
  std::size_t offset_;
};

//! Parse and fully perceive a SMILES string.
Molecule parse_smiles(std::string_view text);

//! Parse without throwing; returns nullopt and fills err when given.
std::optional<Molecule> try_parse_smiles(std::string_view text, std::string* err = nullptr);

//! SSSR perception; fills rings, in_ring, smallest_ring_size, ring_count, env_type and bond in_ring.
void perceive_rings(Molecule& mol);

//! Huckel perception over SSSR rings and fused ring pairs. Input-aromatic atoms stay aromatic.
void perceive_aromaticity(Molecule& mol);

//! Bond conjugation and atom hybridization.
void perceive_conjugation(Molecule& mol);
void perceive_hybridization(Molecule& mol);

//! Rotatable-bond flags.
void perceive_rotatable(Molecule& mol);

struct SmilesWriteOptions {
  //! When set, the DFS root and neighbor order are drawn from this seed.
  std::optional<std::uint64_t> random_seed;
};

//! Serialize to SMILES that re-parses to an isomorphic graph. Not canonical.
std::string write_smiles(const Molecule& mol, const SmilesWriteOptions& opts = {});

//! Sorted multiset of iterated atom invariants; equal for isomorphic molecules.
std::vector<std::uint64_t> invariant_multiset(const Molecule& mol, int iterations = 3);

// Element data

struct ElementInfo {
  const char* symbol;
  int atomic_number;
  double weight;
  int outer_electrons;
  //! Allowed valences; empty means unchecked (metals).
  std::vector<int> valences;
  //! Extra valences accepted only when the default list is exceeded.
  std::vector<int> extended_valences;
};

const ElementInfo* element_by_symbol(std::string_view symbol);
const ElementInfo& element_by_number(int z);
//! Valences allowed for an element carrying a formal charge (isoelectronic rule). Empty means unchecked.
std::vector<int> allowed_valences(int z, int charge, bool include_extended);

}  // namespace atomprior::mol
