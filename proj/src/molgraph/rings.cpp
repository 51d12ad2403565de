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
#include <cstdint>
#include <queue>
#include <set>

#include "atomprior/molgraph.hpp"

namespace atomprior::mol {
namespace {

// Bridges via iterative lowlink DFS; everything else is a ring bond.
std::vector<bool> find_ring_bonds(const Molecule& mol) {
  const int n = static_cast<int>(mol.num_atoms());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> ring(mol.num_bonds(), true);
  int timer = 0;
  struct Frame {
    int v;
    int parent_bond;
    std::size_t next;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) {
      continue;
    }
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = mol.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Neighbor nb = nbrs[f.next++];
        if (nb.bond == f.parent_bond) {
          continue;
        }
        if (disc[nb.atom] < 0) {
          disc[nb.atom] = low[nb.atom] = timer++;
          stack.push_back({nb.atom, nb.bond, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[nb.atom]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) {
            ring[done.parent_bond] = false;
          }
        }
      }
    }
  }
  return ring;
}

struct Candidate {
  std::vector<int> cycle;       // atoms in ring order
  std::vector<int> sorted_atoms;
  std::vector<std::uint64_t> edges;  // bitset over bond indices
};

bool candidate_less(const Candidate& x, const Candidate& y) {
  if (x.cycle.size() != y.cycle.size()) {
    return x.cycle.size() < y.cycle.size();
  }
  return x.sorted_atoms < y.sorted_atoms;
}

}  // namespace

void perceive_rings(Molecule& mol) {
  const int n = static_cast<int>(mol.num_atoms());
  const std::size_t nb = mol.num_bonds();
  std::vector<bool> ring_bond = find_ring_bonds(mol);
  for (std::size_t i = 0; i < nb; ++i) {
    mol.bonds[i].in_ring = ring_bond[i];
  }
  mol.rings.clear();
  for (auto& a : mol.atoms) {
    a.in_ring = false;
    a.smallest_ring_size = 0;
    a.ring_count = 0;
    a.env_type = EnvType::Chain;
  }

  // Ring-bond subgraph components.
  std::vector<std::vector<Neighbor>> g(n);
  for (std::size_t i = 0; i < nb; ++i) {
    if (ring_bond[i]) {
      const Bond& b = mol.bonds[i];
      g[b.a].push_back({b.b, static_cast<int>(i)});
      g[b.b].push_back({b.a, static_cast<int>(i)});
    }
  }
  for (auto& row : g) {
    std::sort(row.begin(), row.end(), [](const Neighbor& x, const Neighbor& y) { return x.atom < y.atom; });
  }
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0 || g[s].empty()) {
      continue;
    }
    std::vector<int> st{s};
    comp[s] = ncomp;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (const auto& e : g[v]) {
        if (comp[e.atom] < 0) {
          comp[e.atom] = ncomp;
          st.push_back(e.atom);
        }
      }
    }
    ++ncomp;
  }

  const std::size_t words = (nb + 63) / 64;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    std::vector<int> cbonds;
    for (int v = 0; v < n; ++v) {
      if (comp[v] == c) {
        verts.push_back(v);
      }
    }
    for (std::size_t i = 0; i < nb; ++i) {
      if (ring_bond[i] && comp[mol.bonds[i].a] == c) {
        cbonds.push_back(static_cast<int>(i));
      }
    }
    const int needed = static_cast<int>(cbonds.size()) - static_cast<int>(verts.size()) + 1;
    if (needed <= 0) {
      continue;
    }

    // Horton candidates: shortest path tree from each vertex closed by each edge.
    std::vector<Candidate> cands;
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<int> dist(n);
    std::vector<int> parent(n);
    std::vector<int> parent_bond(n);
    for (int root : verts) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[root] = 0;
      parent[root] = -1;
      parent_bond[root] = -1;
      std::queue<int> q;
      q.push(root);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& e : g[v]) {
          if (dist[e.atom] < 0) {
            dist[e.atom] = dist[v] + 1;
            parent[e.atom] = v;
            parent_bond[e.atom] = e.bond;
            q.push(e.atom);
          }
        }
      }
      for (int bi : cbonds) {
        const int x = mol.bonds[bi].a;
        const int y = mol.bonds[bi].b;
        if (parent_bond[x] == bi || parent_bond[y] == bi) {
          continue;
        }
        std::vector<int> px;
        std::vector<int> py;
        for (int v = x; v != -1; v = parent[v]) {
          px.push_back(v);
        }
        for (int v = y; v != -1; v = parent[v]) {
          py.push_back(v);
        }
        // Paths must meet only at the root.
        std::vector<int> sx(px.begin(), px.end() - 1);
        std::vector<int> sy(py.begin(), py.end() - 1);
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        std::vector<int> inter;
        std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(inter));
        if (!inter.empty()) {
          continue;
        }
        Candidate cand;
        cand.edges.assign(words, 0);
        // root ... x, y ... root
        for (auto it = px.rbegin(); it != px.rend(); ++it) {
          cand.cycle.push_back(*it);
        }
        for (int v : py) {
          if (v != root) {
            cand.cycle.push_back(v);
          }
        }
        auto set_edge = [&](int e) { cand.edges[static_cast<std::size_t>(e) / 64] |= 1ULL << (e % 64); };
        for (std::size_t k = 0; k + 1 < px.size(); ++k) {
          set_edge(parent_bond[px[k]]);
        }
        for (std::size_t k = 0; k + 1 < py.size(); ++k) {
          set_edge(parent_bond[py[k]]);
        }
        set_edge(bi);
        if (!seen.insert(cand.edges).second) {
          continue;
        }
        cand.sorted_atoms = cand.cycle;
        std::sort(cand.sorted_atoms.begin(), cand.sorted_atoms.end());
        cands.push_back(std::move(cand));
      }
    }
    std::sort(cands.begin(), cands.end(), candidate_less);

    // Greedy GF(2) independence test against a reduced basis keyed by pivot bit.
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> basis;
    int taken = 0;
    for (auto& cand : cands) {
      std::vector<std::uint64_t> v = cand.edges;
      for (const auto& [pivot, row] : basis) {
        if ((v[pivot / 64] >> (pivot % 64)) & 1ULL) {
          for (std::size_t w = 0; w < words; ++w) {
            v[w] ^= row[w];
          }
        }
      }
      std::size_t pivot = SIZE_MAX;
      for (std::size_t w = 0; w < words && pivot == SIZE_MAX; ++w) {
        if (v[w] != 0) {
          pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
        }
      }
      if (pivot == SIZE_MAX) {
        continue;
      }
      for (auto& [p2, row] : basis) {
        if ((row[pivot / 64] >> (pivot % 64)) & 1ULL) {
          for (std::size_t w = 0; w < words; ++w) {
            row[w] ^= v[w];
          }
        }
      }
      basis.emplace_back(pivot, std::move(v));
      mol.rings.push_back(cand.cycle);
      if (++taken == needed) {
        break;
      }
    }
  }

  std::sort(mol.rings.begin(), mol.rings.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    std::vector<int> sx(x);
    std::vector<int> sy(y);
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    return sx < sy;
  });
  for (const auto& r : mol.rings) {
    const int size = static_cast<int>(r.size());
    for (int v : r) {
      Atom& a = mol.atoms[v];
      a.in_ring = true;
      ++a.ring_count;
      if (a.smallest_ring_size == 0 || size < a.smallest_ring_size) {
        a.smallest_ring_size = size;
      }
    }
  }
  for (auto& a : mol.atoms) {
    a.env_type = a.ring_count >= 2 ? EnvType::FusedRing : (a.ring_count == 1 ? EnvType::Ring : EnvType::Chain);
  }
}

}  // namespace atomprior::mol
