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
#include <queue>

#include "internal.hpp"

namespace atomprior::mol::detail {
namespace {

// Edmonds blossom maximum matching on a small general graph.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const std::vector<std::vector<int>>& g)
      : g_(g), n_(static_cast<int>(g.size())), match_(n_, -1), p_(n_), base_(n_), used_(n_), blossom_(n_) {}

  const std::vector<int>& solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) {
        continue;
      }
      for (int to : g_[v]) {
        if (match_[to] == -1) {
          match_[to] = v;
          match_[v] = to;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) {
        continue;
      }
      int u = find_path(v);
      while (u != -1) {
        const int pv = p_[u];
        const int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) {
        break;
      }
      a = p_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) {
        return b;
      }
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(p_.begin(), p_.end(), -1);
    for (int i = 0; i < n_; ++i) {
      base_[i] = i;
    }
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : g_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) {
          continue;
        }
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) {
            return to;
          }
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> p_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
};

}  // namespace

int kekulize(Molecule& mol, const std::vector<bool>& need_double) {
  std::vector<int> local(mol.num_atoms(), -1);
  std::vector<int> global;
  for (std::size_t i = 0; i < mol.num_atoms(); ++i) {
    if (need_double[i]) {
      local[i] = static_cast<int>(global.size());
      global.push_back(static_cast<int>(i));
    }
  }
  for (auto& b : mol.bonds) {
    if (b.order == BondOrder::Aromatic) {
      b.kekule_order = 1;
    }
  }
  if (global.empty()) {
    return -1;
  }
  std::vector<std::vector<int>> g(global.size());
  for (const auto& b : mol.bonds) {
    if (b.order == BondOrder::Aromatic && local[b.a] >= 0 && local[b.b] >= 0) {
      g[local[b.a]].push_back(local[b.b]);
      g[local[b.b]].push_back(local[b.a]);
    }
  }
  for (auto& row : g) {
    std::sort(row.begin(), row.end());
  }
  BlossomMatcher matcher(g);
  const std::vector<int>& m = matcher.solve();
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == -1) {
      return global[k];
    }
    if (static_cast<int>(k) < m[k]) {
      const int bi = mol.bond_between(global[k], global[m[k]]);
      mol.bonds[bi].kekule_order = 2;
    }
  }
  return -1;
}

}  // namespace atomprior::mol::detail
