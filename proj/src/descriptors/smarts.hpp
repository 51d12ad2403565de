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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "atomprior/molgraph.hpp"

namespace atomprior::desc::detail {

//! Hydrogen-expanded view of a molecule; implicit H become explicit nodes after the heavy atoms.
struct ExplicitHGraph {
  struct Node {
    int z = 0;
    bool aromatic = false;
    int charge = 0;
    int h_count = 0;
    int connectivity = 0;
    int heavy_parent = -1;
  };
  struct Edge {
    int to;
    mol::BondOrder order;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<Edge>> adj;
  std::size_t num_heavy = 0;

  explicit ExplicitHGraph(const mol::Molecule& mol);
};

//! Acyclic SMARTS subset: bracket and organic atoms, !&,; logic, #n, A/a, H, X, D, charges,
//! bonds - = # : ~ and branches. Ring closures and recursion are not supported.
class SmartsPattern {
 public:
  explicit SmartsPattern(std::string_view text);
  ~SmartsPattern();
  SmartsPattern(SmartsPattern&&) noexcept;
  SmartsPattern& operator=(SmartsPattern&&) noexcept;

  //! True when the pattern matches with its first atom mapped to node root.
  bool matches_at(const ExplicitHGraph& g, int root) const;
  const std::string& text() const { return text_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::string text_;
};

}  // namespace atomprior::desc::detail
