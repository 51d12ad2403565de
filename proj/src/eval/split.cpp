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
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "atomprior/eval.hpp"
#include "atomprior/hash.hpp"

namespace atomprior::eval {

Split random_split(std::size_t n, double train_ratio, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::shuffle(idx.begin(), idx.end(), rng);
  const auto n_train = static_cast<std::size_t>(std::floor(train_ratio * static_cast<double>(n) + 1e-9));
  Split s;
  s.train.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(std::min(n_train, n)));
  s.test.assign(idx.begin() + static_cast<std::ptrdiff_t>(std::min(n_train, n)), idx.end());
  return s;
}

std::string scaffold_key(const mol::Molecule& mol) {
  const std::size_t n = mol.num_atoms();
  std::vector<int> degree(n, 0);
  std::vector<bool> alive(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = static_cast<int>(mol.neighbors(static_cast<int>(i)).size());
  }
  // Strip terminal atoms until only rings and the linkers between them remain.
  std::vector<int> stack;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] <= 1) {
      stack.push_back(static_cast<int>(i));
    }
  }
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    if (!alive[static_cast<std::size_t>(a)]) {
      continue;
    }
    alive[static_cast<std::size_t>(a)] = false;
    for (const auto& nb : mol.neighbors(a)) {
      const auto b = static_cast<std::size_t>(nb.atom);
      if (alive[b] && --degree[b] <= 1) {
        stack.push_back(nb.atom);
      }
    }
  }

  std::vector<int> nodes;
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) {
      nodes.push_back(static_cast<int>(i));
    }
  }
  if (nodes.empty()) {
    return "";
  }
  // Unlabeled Weisfeiler-Lehman refinement until the number of colour classes stops growing.
  std::vector<std::uint64_t> colour(n, 1);
  std::size_t classes = 1;
  for (std::size_t iter = 0; iter <= nodes.size(); ++iter) {
    std::vector<std::uint64_t> next(n, 0);
    for (int a : nodes) {
      std::vector<std::uint64_t> around;
      for (const auto& nb : mol.neighbors(a)) {
        if (alive[static_cast<std::size_t>(nb.atom)]) {
          around.push_back(colour[static_cast<std::size_t>(nb.atom)]);
        }
      }
      std::sort(around.begin(), around.end());
      std::uint64_t h = colour[static_cast<std::size_t>(a)];
      for (auto c : around) {
        hash_combine(h, c);
      }
      next[static_cast<std::size_t>(a)] = h;
    }
    colour = std::move(next);
    std::vector<std::uint64_t> distinct;
    for (int a : nodes) {
      distinct.push_back(colour[static_cast<std::size_t>(a)]);
    }
    std::sort(distinct.begin(), distinct.end());
    const auto count = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
    if (count == classes && iter > 0) {
      break;
    }
    classes = count;
  }
  std::vector<std::uint64_t> multiset;
  for (int a : nodes) {
    multiset.push_back(colour[static_cast<std::size_t>(a)]);
  }
  std::sort(multiset.begin(), multiset.end());
  std::uint64_t h = nodes.size();
  for (auto c : multiset) {
    hash_combine(h, c);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%zu:%016llx", nodes.size(), static_cast<unsigned long long>(h));
  return buf;
}

Split scaffold_split(const std::vector<std::string>& keys, double train_ratio) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    groups[keys[i]].push_back(i);
  }
  std::vector<const std::vector<std::size_t>*> order;
  for (const auto& [k, members] : groups) {
    order.push_back(&members);
  }
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->size() != b->size()) {
      return a->size() > b->size();
    }
    return a->front() < b->front();
  });
  const double cutoff = train_ratio * static_cast<double>(keys.size()) + 1e-9;
  Split s;
  for (const auto* g : order) {
    auto& side = static_cast<double>(s.train.size() + g->size()) > cutoff ? s.test : s.train;
    side.insert(side.end(), g->begin(), g->end());
  }
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

}  // namespace atomprior::eval
