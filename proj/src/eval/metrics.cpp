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
#include <numeric>

#include "atomprior/eval.hpp"

namespace atomprior::eval {

double auroc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size()) {
    throw LengthMismatch("auroc: " + std::to_string(scores.size()) + " scores, " + std::to_string(labels.size()) +
                         " labels");
  }
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  // Average 1-based ranks over tied groups.
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) {
      ++j;
    }
    const double r = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t t = i; t <= j; ++t) {
      rank[order[t]] = r;
    }
    i = j + 1;
  }
  double pos_rank_sum = 0.0;
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == 1) {
      pos_rank_sum += rank[i];
      ++n_pos;
    }
  }
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw DegenerateLabels("auroc needs at least one positive and one negative label");
  }
  const double np = static_cast<double>(n_pos);
  const double u = pos_rank_sum - np * (np + 1.0) / 2.0;
  return u / (np * static_cast<double>(n_neg));
}

double rmse(const std::vector<double>& preds, const std::vector<double>& labels) {
  if (preds.size() != labels.size() || preds.empty()) {
    throw LengthMismatch("rmse: " + std::to_string(preds.size()) + " predictions, " + std::to_string(labels.size()) +
                         " labels");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const double d = preds[i] - labels[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(preds.size()));
}

double knn_predict(const std::vector<retrieval::Hit>& hits, const retrieval::AnalogueIndex& index, bool weighted) {
  if (hits.empty()) {
    throw EmptyPool("knn_predict: no neighbours");
  }
  double plain = 0.0;
  double wsum = 0.0;
  double wy = 0.0;
  for (const auto& h : hits) {
    const double y = index.entries.at(h.index).label;
    plain += y;
    wsum += h.similarity;
    wy += h.similarity * y;
  }
  plain /= static_cast<double>(hits.size());
  if (!weighted || wsum == 0.0) {
    return plain;
  }
  return wy / wsum;
}

double knn_predict(const retrieval::Fingerprint& query, const retrieval::AnalogueIndex& index, std::size_t k,
                   bool weighted, std::optional<std::string_view> exclude_smiles) {
  if (k == 0) {
    throw std::invalid_argument("knn_predict: k must be at least 1");
  }
  return knn_predict(retrieval::top_k(query, index, k, exclude_smiles), index, weighted);
}

}  // namespace atomprior::eval
