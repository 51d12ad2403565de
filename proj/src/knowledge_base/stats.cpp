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
#include <limits>
#include <stdexcept>

#include "atomprior/knowledge_base.hpp"

namespace atomprior::kb {

double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) {
    return 0.0;
  }
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) {
    return sorted.back();
  }
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return quantile_sorted(values, 0.5);
}

double iqr(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return quantile_sorted(values, 0.75) - quantile_sorted(values, 0.25);
}

int low_median(std::vector<int> values) {
  if (values.empty()) {
    return 0;
  }
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

double normalized_entropy(const std::vector<std::int64_t>& counts) {
  std::int64_t total = 0;
  std::size_t categories = 0;
  for (auto c : counts) {
    if (c > 0) {
      total += c;
      ++categories;
    }
  }
  if (categories <= 1) {
    return 0.0;
  }
  double h = 0.0;
  for (auto c : counts) {
    if (c > 0) {
      const double p = static_cast<double>(c) / static_cast<double>(total);
      h -= p * std::log(p);
    }
  }
  return h / std::log(static_cast<double>(categories));
}

double entropy_bits(const std::vector<std::int64_t>& counts) {
  std::int64_t total = 0;
  for (auto c : counts) {
    total += c > 0 ? c : 0;
  }
  double h = 0.0;
  for (auto c : counts) {
    if (c > 0) {
      const double p = static_cast<double>(c) / static_cast<double>(total);
      h -= p * std::log2(p);
    }
  }
  return h;
}

void CorpusStats::merge(const CorpusStats& other) {
  for (const auto& [k, v] : other.token_counts) {
    token_counts[k] += v;
  }
  for (const auto& [k, v] : other.pair_counts) {
    pair_counts[k] += v;
  }
  for (const auto& [k, v] : other.atoms_with_neighbor) {
    atoms_with_neighbor[k] += v;
  }
  total_atoms += other.total_atoms;
  total_adjacent_pairs += other.total_adjacent_pairs;
}

double pmi(int t, int u, const CorpusStats& stats) {
  const auto it = stats.token_counts.find(t);
  const auto iu = stats.token_counts.find(u);
  if (it == stats.token_counts.end() || iu == stats.token_counts.end() || it->second == 0 || iu->second == 0) {
    throw std::out_of_range("pmi: token not present in corpus");
  }
  const auto ip = stats.pair_counts.find({std::min(t, u), std::max(t, u)});
  if (ip == stats.pair_counts.end() || ip->second == 0 || stats.total_adjacent_pairs == 0) {
    return -std::numeric_limits<double>::infinity();
  }
  const double n = static_cast<double>(stats.total_atoms);
  const double joint = static_cast<double>(ip->second) / static_cast<double>(stats.total_adjacent_pairs);
  const double pt = static_cast<double>(it->second) / n;
  const double pu = static_cast<double>(iu->second) / n;
  return std::log2(joint / (pt * pu));
}

namespace detail {

std::vector<NeighborStat> rank_neighbors(int t, const std::vector<int>& partners, const CorpusStats& stats,
                                         std::size_t n) {
  std::vector<NeighborStat> all;
  const double support = static_cast<double>(stats.token_counts.at(t));
  for (int u : partners) {
    const double v = pmi(t, u, stats);
    if (!std::isfinite(v)) {
      continue;
    }
    const auto ic = stats.atoms_with_neighbor.find({t, u});
    const double co = ic == stats.atoms_with_neighbor.end() ? 0.0 : static_cast<double>(ic->second) / support;
    all.push_back({u, v, co});
  }
  std::sort(all.begin(), all.end(), [](const NeighborStat& a, const NeighborStat& b) {
    if (a.pmi != b.pmi) {
      return a.pmi > b.pmi;
    }
    return a.token < b.token;
  });
  if (all.size() > n) {
    all.resize(n);
  }
  return all;
}

}  // namespace detail

std::vector<NeighborStat> top_neighbors(int t, const CorpusStats& stats, std::size_t n) {
  std::vector<int> partners;
  for (const auto& [key, count] : stats.pair_counts) {
    if (count == 0) {
      continue;
    }
    if (key.first == t) {
      partners.push_back(key.second);
    } else if (key.second == t) {
      partners.push_back(key.first);
    }
  }
  return detail::rank_neighbors(t, partners, stats, n);
}

}  // namespace atomprior::kb
