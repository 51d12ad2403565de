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

// Serial references against the OpenMP kernels: retrieval scan, batch featurization, KB aggregation.

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "atomprior/eval.hpp"

namespace {

using namespace atomprior;

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> smiles = [] {
    std::vector<std::string> out;
    std::ifstream in(ATOMPRIOR_CORPUS);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      if (!line.empty() && mol::try_parse_smiles(line)) out.push_back(line);
    }
    return out;
  }();
  return smiles;
}

struct Shared {
  tok::InvariantEmbedding embed;
  tok::Codebook codebook;
  std::vector<eval::Featurized> feats;
};

const Shared& shared() {
  static const Shared s = [] {
    Shared x;
    std::vector<std::vector<double>> samples;
    for (std::size_t i = 0; i < 200 && i < corpus().size(); ++i) {
      for (auto& v : x.embed.embed_all(mol::parse_smiles(corpus()[i]))) samples.push_back(std::move(v));
    }
    x.codebook = tok::build_codebook(samples, 256);
    x.feats = eval::featurize(corpus(), x.embed, x.codebook);
    return x;
  }();
  return s;
}

retrieval::AnalogueIndex random_pool(std::size_t n) {
  std::mt19937_64 rng(1);
  retrieval::AnalogueIndex idx;
  for (std::size_t i = 0; i < n; ++i) {
    retrieval::Fingerprint fp(2048);
    for (int b = 0; b < 60; ++b) fp.set(rng() % 2048);
    idx.entries.push_back({std::to_string(i), fp, 0.0, {}, {}});
  }
  return idx;
}

template <bool Parallel>
void BM_TopK(benchmark::State& state) {
  const auto pool = random_pool(static_cast<std::size_t>(state.range(0)));
  const auto& q = pool.entries[7].fingerprint;
  for (auto _ : state) {
    auto hits = Parallel ? retrieval::top_k(q, pool, 10) : retrieval::top_k_serial(q, pool, 10);
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TopK<false>)->Name("top_k/serial")->Arg(10000)->Arg(200000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TopK<true>)->Name("top_k/openmp")->Arg(10000)->Arg(200000)->Unit(benchmark::kMicrosecond)->UseRealTime();

template <bool Parallel>
void BM_Featurize(benchmark::State& state) {
  const auto& s = shared();
  for (auto _ : state) {
    auto f = Parallel ? eval::featurize(corpus(), s.embed, s.codebook) : eval::featurize_serial(corpus(), s.embed, s.codebook);
    benchmark::DoNotOptimize(f);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}
BENCHMARK(BM_Featurize<false>)->Name("featurize/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Featurize<true>)->Name("featurize/openmp")->Unit(benchmark::kMillisecond)->UseRealTime();

template <bool Parallel>
void BM_Aggregate(benchmark::State& state) {
  const auto& s = shared();
  std::vector<kb::CorpusItem> items;
  for (const auto& f : s.feats) {
    if (f.ok) items.push_back({&f.mol, &f.tokens, &f.attrs});
  }
  for (auto _ : state) {
    auto agg = Parallel ? kb::aggregate_parallel(items) : kb::aggregate(items);
    benchmark::DoNotOptimize(agg);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(items.size()));
}
BENCHMARK(BM_Aggregate<false>)->Name("aggregate/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Aggregate<true>)->Name("aggregate/openmp")->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
