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
#include <vector>

#include "atomprior/molgraph.hpp"

namespace atomprior::mol::detail {

//! Assign Kekule orders to aromatic bonds. need_double marks atoms that must carry one double bond.
//! Returns the index of an atom left unmatched, or -1 on success.
int kekulize(Molecule& mol, const std::vector<bool>& need_double);

//! Lowest allowed valence >= used, searching the default list then the extended one. -1 if none.
int pick_valence(int z, int charge, int used);

//! Implicit H a SMILES reader would infer for an organic-subset atom with this bonding.
//! nonaromatic_valence counts Kekule orders of non-aromatic bonds plus folded H.
struct OrganicInference {
  int implicit_h = 0;
  bool need_double = false;
  bool ok = true;
};
OrganicInference infer_organic(int z, bool aromatic, int nonaromatic_valence, int aromatic_bonds);
OrganicInference infer_bracket_aromatic(int z, int charge, int nonaromatic_valence, int aromatic_bonds,
                                        int h_count);

}  // namespace atomprior::mol::detail
