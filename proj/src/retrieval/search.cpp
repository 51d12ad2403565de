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

#include <omp.h>

#include "atomprior/retrieval.hpp"

namespace atomprior::retrieval {
namespace {

bool ranks_before(const Hit& a, const Hit& b) {
  if (a.similarity != b.similarity) {
    return a.similarity > b.similarity;
  }
  return a.index < b.index;
}

void keep_best(std::vector<Hit>& hits, std::size_t k) {
  if (hits.size() > k) {
    std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(k), hits.end(), ranks_before);
    hits.resize(k);
  } else {
    std::sort(hits.begin(), hits.end(), ranks_before);
  }
}

void check_width(const Fingerprint& query, const AnalogueIndex& index) {
  for (const auto& e : index.entries) {
    if (e.fingerprint.nbits() != query.nbits()) {
      throw WidthMismatch(query.nbits(), e.fingerprint.nbits());
    }
  }
}

}  // namespace

std::vector<Hit> top_k_serial(const Fingerprint& query, const AnalogueIndex& index, std::size_t k,
                              std::optional<std::string_view> exclude_smiles) {
  if (k == 0) {
    return {};
  }
  check_width(query, index);
  std::vector<Hit> hits;
  hits.reserve(index.entries.size());
  for (std::size_t i = 0; i < index.entries.size(); ++i) {
    const IndexEntry& e = index.entries[i];
    if (exclude_smiles && e.smiles == *exclude_smiles) {
      continue;
    }
    hits.push_back({i, tanimoto(query, e.fingerprint)});
  }
  keep_best(hits, k);
  return hits;
}

std::vector<Hit> top_k(const Fingerprint& query, const AnalogueIndex& index, std::size_t k,
                       std::optional<std::string_view> exclude_smiles) {
  if (k == 0) {
    return {};
  }
  check_width(query, index);
  const auto n = static_cast<std::ptrdiff_t>(index.entries.size());
  std::vector<std::vector<Hit>> local(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    std::vector<Hit>& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const IndexEntry& e = index.entries[static_cast<std::size_t>(i)];
      if (exclude_smiles && e.smiles == *exclude_smiles) {
        continue;
      }
      mine.push_back({static_cast<std::size_t>(i), tanimoto(query, e.fingerprint)});
      if (mine.size() >= 4 * k + 64) {
        keep_best(mine, k);
      }
    }
    keep_best(mine, k);
  }
  std::vector<Hit> merged;
  for (auto& part : local) {
    merged.insert(merged.end(), part.begin(), part.end());
  }
  keep_best(merged, k);
  return merged;
}

}  // namespace atomprior::retrieval
