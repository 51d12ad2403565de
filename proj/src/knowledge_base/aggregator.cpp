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
#include <array>
#include <random>
#include <set>

#include <omp.h>

#include "atomprior/hash.hpp"
#include "atomprior/knowledge_base.hpp"

namespace atomprior::kb {

namespace detail {
std::vector<NeighborStat> rank_neighbors(int t, const std::vector<int>& partners, const CorpusStats& stats,
                                         std::size_t n);
}  // namespace detail

namespace {

constexpr std::size_t kEnvCount = 3;
constexpr std::size_t kHybCount = 7;

struct Row {
  double degree;
  double ring_size;
  double gasteiger;
  double tpsa;
  double hetero_r1;
  int inductive;
  int resonance;
};

struct TokenAcc {
  std::int64_t support = 0;
  std::map<std::string, std::int64_t> symbols;
  std::array<std::int64_t, kEnvCount> env{};
  std::array<std::int64_t, kHybCount> hyb{};
  std::int64_t aromatic = 0;
  std::int64_t conjugated = 0;
  std::int64_t donor = 0;
  std::int64_t acceptor = 0;
  std::vector<Row> rows;
  std::mt19937_64 rng;
};

int atomic_number_of(const std::string& symbol) {
  const mol::ElementInfo* e = mol::element_by_symbol(symbol);
  return e == nullptr ? 1000 : e->atomic_number;
}

template <std::size_t N>
std::size_t modal_index(const std::array<std::int64_t, N>& counts) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < N; ++i) {
    if (counts[i] > counts[best]) {
      best = i;
    }
  }
  return best;
}

double ratio(std::int64_t part, std::int64_t whole) {
  return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

struct Aggregator::Impl {
  AggregatorOptions opts;
  std::map<int, TokenAcc> acc;
  CorpusStats stats;

  TokenAcc& slot(int token) {
    auto [it, inserted] = acc.try_emplace(token);
    if (inserted) {
      std::uint64_t s = opts.seed;
      hash_combine(s, static_cast<std::uint64_t>(token));
      it->second.rng.seed(s);
    }
    return it->second;
  }

  void push_row(TokenAcc& a, const Row& row) {
    if (a.rows.size() < opts.reservoir_cap) {
      a.rows.push_back(row);
      return;
    }
    std::uniform_int_distribution<std::int64_t> pick(0, a.support - 1);
    const std::int64_t j = pick(a.rng);
    if (j < static_cast<std::int64_t>(opts.reservoir_cap)) {
      a.rows[static_cast<std::size_t>(j)] = row;
    }
  }
};

Aggregator::Aggregator(AggregatorOptions opts) : impl_(std::make_unique<Impl>()) { impl_->opts = opts; }
Aggregator::~Aggregator() = default;
Aggregator::Aggregator(const Aggregator& other) : impl_(std::make_unique<Impl>(*other.impl_)) {}
Aggregator::Aggregator(Aggregator&&) noexcept = default;
Aggregator& Aggregator::operator=(Aggregator&&) noexcept = default;

void Aggregator::add(const mol::Molecule& mol, const std::vector<int>& tokens,
                     const std::vector<desc::AtomAttributes>& attrs) {
  const std::size_t n = mol.num_atoms();
  if (tokens.size() != n || attrs.size() != n) {
    throw MisalignedInput("aggregate: " + std::to_string(n) + " atoms, " + std::to_string(tokens.size()) +
                          " tokens, " + std::to_string(attrs.size()) + " attribute rows");
  }
  CorpusStats& st = impl_->stats;
  for (std::size_t i = 0; i < n; ++i) {
    const desc::AtomAttributes& at = attrs[i];
    TokenAcc& a = impl_->slot(tokens[i]);
    ++a.support;
    ++a.symbols[at.symbol];
    ++a.env[static_cast<std::size_t>(at.env_type)];
    ++a.hyb[static_cast<std::size_t>(at.hybridization)];
    a.aromatic += at.aromatic ? 1 : 0;
    a.conjugated += at.conjugated ? 1 : 0;
    a.donor += at.is_hbd ? 1 : 0;
    a.acceptor += at.is_hba ? 1 : 0;
    impl_->push_row(a, Row{static_cast<double>(at.degree), static_cast<double>(at.smallest_ring_size),
                           at.gasteiger_charge, at.tpsa_contrib, static_cast<double>(at.hetero_neighbors_r1),
                           at.inductive_sign, at.resonance_sign});

    ++st.token_counts[tokens[i]];
    ++st.total_atoms;
    std::set<int> seen;
    for (const auto& nb : mol.neighbors(static_cast<int>(i))) {
      seen.insert(tokens[nb.atom]);
    }
    for (int u : seen) {
      ++st.atoms_with_neighbor[{tokens[i], u}];
    }
  }
  for (const auto& b : mol.bonds) {
    const int t = tokens[b.a];
    const int u = tokens[b.b];
    ++st.pair_counts[{std::min(t, u), std::max(t, u)}];
    ++st.total_adjacent_pairs;
  }
}

void Aggregator::merge(const Aggregator& other) {
  impl_->stats.merge(other.impl_->stats);
  const std::size_t cap = impl_->opts.reservoir_cap;
  for (const auto& [token, src] : other.impl_->acc) {
    TokenAcc& dst = impl_->slot(token);
    dst.support += src.support;
    for (const auto& [s, c] : src.symbols) {
      dst.symbols[s] += c;
    }
    for (std::size_t k = 0; k < kEnvCount; ++k) {
      dst.env[k] += src.env[k];
    }
    for (std::size_t k = 0; k < kHybCount; ++k) {
      dst.hyb[k] += src.hyb[k];
    }
    dst.aromatic += src.aromatic;
    dst.conjugated += src.conjugated;
    dst.donor += src.donor;
    dst.acceptor += src.acceptor;
    dst.rows.insert(dst.rows.end(), src.rows.begin(), src.rows.end());
    if (dst.rows.size() > cap) {
      // Beyond the cap the merged sample is a uniform subsample of both reservoirs.
      std::shuffle(dst.rows.begin(), dst.rows.end(), dst.rng);
      dst.rows.resize(cap);
    }
  }
}

const CorpusStats& Aggregator::stats() const { return impl_->stats; }

std::vector<AtomTokenProfile> Aggregator::profiles() const {
  const CorpusStats& st = impl_->stats;
  std::map<int, std::vector<int>> partners;
  for (const auto& [key, count] : st.pair_counts) {
    if (count == 0) {
      continue;
    }
    partners[key.first].push_back(key.second);
    if (key.first != key.second) {
      partners[key.second].push_back(key.first);
    }
  }

  std::vector<AtomTokenProfile> out;
  out.reserve(impl_->acc.size());
  for (const auto& [token, a] : impl_->acc) {
    AtomTokenProfile p;
    p.token_id = token;
    p.support_count = a.support;

    std::vector<std::pair<std::string, std::int64_t>> syms(a.symbols.begin(), a.symbols.end());
    std::sort(syms.begin(), syms.end(), [](const auto& x, const auto& y) {
      if (x.second != y.second) {
        return x.second > y.second;
      }
      const int zx = atomic_number_of(x.first);
      const int zy = atomic_number_of(y.first);
      return zx != zy ? zx < zy : x.first < y.first;
    });
    p.symbol_distribution = syms;
    p.primary_symbol = syms.empty() ? "" : syms.front().first;
    p.is_mixed = syms.size() > 1;
    std::vector<std::int64_t> counts;
    for (const auto& s : syms) {
      counts.push_back(s.second);
    }
    p.mixture_entropy =
        impl_->opts.entropy == EntropyMode::Bits ? entropy_bits(counts) : normalized_entropy(counts);

    p.env_type = std::string(mol::to_string(static_cast<mol::EnvType>(modal_index(a.env))));
    for (std::size_t k = 0; k < kEnvCount; ++k) {
      if (a.env[k] > 0) {
        p.env_distribution.emplace_back(std::string(mol::to_string(static_cast<mol::EnvType>(k))), a.env[k]);
      }
    }
    p.hybridization = std::string(mol::to_string(static_cast<mol::Hybridization>(modal_index(a.hyb))));
    p.aromatic_ratio = ratio(a.aromatic, a.support);
    p.conjugated_ratio = ratio(a.conjugated, a.support);
    p.hbond.donor_ratio = ratio(a.donor, a.support);
    p.hbond.acceptor_ratio = ratio(a.acceptor, a.support);

    std::vector<double> deg, ring, q, tpsa, het;
    std::vector<int> ind, res;
    for (const Row& r : a.rows) {
      deg.push_back(r.degree);
      ring.push_back(r.ring_size);
      q.push_back(r.gasteiger);
      tpsa.push_back(r.tpsa);
      het.push_back(r.hetero_r1);
      ind.push_back(r.inductive);
      res.push_back(r.resonance);
    }
    p.median_degree = median(deg);
    p.median_ring_size = median(ring);
    p.polarity.gasteiger_q50 = median(q);
    p.polarity.gasteiger_iqr = iqr(q);
    p.polarity.tpsa_contrib_q50 = median(tpsa);
    p.hetero_r1_median = median(het);
    p.electrics.inductive = low_median(ind);
    p.electrics.resonance = low_median(res);

    const auto ip = partners.find(token);
    if (ip != partners.end()) {
      p.neighbors_top = detail::rank_neighbors(token, ip->second, st, impl_->opts.top_n);
    }
    out.push_back(std::move(p));
  }
  return out;
}

Aggregator aggregate(std::span<const CorpusItem> corpus, const AggregatorOptions& opts) {
  Aggregator agg(opts);
  for (const auto& item : corpus) {
    agg.add(*item.mol, *item.tokens, *item.attrs);
  }
  return agg;
}

Aggregator aggregate_parallel(std::span<const CorpusItem> corpus, const AggregatorOptions& opts, int shards) {
  if (shards <= 0) {
    shards = omp_get_max_threads();
  }
  for (const auto& item : corpus) {
    if (item.tokens->size() != item.mol->num_atoms() || item.attrs->size() != item.mol->num_atoms()) {
      throw MisalignedInput("aggregate: token or attribute list does not match atom count");
    }
  }
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
  std::vector<Aggregator> parts(static_cast<std::size_t>(shards), Aggregator(opts));
#pragma omp parallel for schedule(static)
  for (int s = 0; s < shards; ++s) {
    const std::ptrdiff_t lo = n * s / shards;
    const std::ptrdiff_t hi = n * (s + 1) / shards;
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
      const auto& item = corpus[static_cast<std::size_t>(i)];
      parts[static_cast<std::size_t>(s)].add(*item.mol, *item.tokens, *item.attrs);
    }
  }
  Aggregator out(opts);
  for (const auto& p : parts) {
    out.merge(p);
  }
  return out;
}

}  // namespace atomprior::kb
