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

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "atomprior/descriptors.hpp"
#include "atomprior/molgraph.hpp"

namespace atomprior::kb {

class MisalignedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SchemaViolation : public std::runtime_error {
 public:
  SchemaViolation(std::string pointer, const std::string& what);
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct NeighborStat {
  int token = 0;
  double pmi = 0.0;
  double co_occur_ratio = 0.0;
  bool operator==(const NeighborStat&) const = default;
};

struct Electrics {
  int inductive = 0;
  int resonance = 0;
  bool operator==(const Electrics&) const = default;
};

struct Polarity {
  double gasteiger_q50 = 0.0;
  double gasteiger_iqr = 0.0;
  double tpsa_contrib_q50 = 0.0;
  bool operator==(const Polarity&) const = default;
};

struct HBond {
  double donor_ratio = 0.0;
  double acceptor_ratio = 0.0;
  bool operator==(const HBond&) const = default;
};

using CountList = std::vector<std::pair<std::string, std::int64_t>>;

struct AtomTokenProfile {
  int token_id = 0;
  std::int64_t support_count = 0;
  std::string primary_symbol;
  bool is_mixed = false;
  //! Ordered as serialized: count descending, then symbol.
  CountList symbol_distribution;
  double mixture_entropy = 0.0;
  std::string env_type = "chain";
  //! chain, ring, fused_ring order; zero counts omitted.
  CountList env_distribution;
  double aromatic_ratio = 0.0;
  double conjugated_ratio = 0.0;
  double median_degree = 0.0;
  double median_ring_size = 0.0;
  std::string hybridization = "other";
  Electrics electrics;
  Polarity polarity;
  HBond hbond;
  double hetero_r1_median = 0.0;
  std::vector<NeighborStat> neighbors_top;
  //! Unknown top-level fields, kept verbatim and written back after the known ones.
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  //! Fraction of instances in a ring or fused ring.
  double ring_ratio() const;
  bool operator==(const AtomTokenProfile&) const = default;
};

struct CorpusStats {
  std::map<int, std::int64_t> token_counts;
  //! Bond-adjacent unordered pairs keyed (min, max).
  std::map<std::pair<int, int>, std::int64_t> pair_counts;
  //! (t, u) -> number of atoms of token t with at least one neighbor of token u.
  std::map<std::pair<int, int>, std::int64_t> atoms_with_neighbor;
  std::int64_t total_atoms = 0;
  std::int64_t total_adjacent_pairs = 0;

  void merge(const CorpusStats& other);
  bool operator==(const CorpusStats&) const = default;
};

//! log2 P(t,u) / (P(t) P(u)); -infinity when the pair was never bonded.
double pmi(int t, int u, const CorpusStats& stats);

//! n highest-PMI neighbor tokens of t, ties by lower token id.
std::vector<NeighborStat> top_neighbors(int t, const CorpusStats& stats, std::size_t n = 5);

// Robust summaries.
//! Linear interpolation between order statistics (type 7); sorted input.
double quantile_sorted(const std::vector<double>& sorted, double p);
double median(std::vector<double> values);
double iqr(std::vector<double> values);
//! Lower middle element for even counts, so the result is one of the inputs.
int low_median(std::vector<int> values);
//! Shannon entropy of the counts divided by log(#categories); 0 for one category.
double normalized_entropy(const std::vector<std::int64_t>& counts);
//! Shannon entropy of the counts in bits.
double entropy_bits(const std::vector<std::int64_t>& counts);

enum class EntropyMode { Normalized, Bits };

struct AggregatorOptions {
  std::size_t reservoir_cap = 100000;
  std::uint64_t seed = 42;
  std::size_t top_n = 5;
  EntropyMode entropy = EntropyMode::Normalized;
};

struct CorpusItem {
  const mol::Molecule* mol = nullptr;
  const std::vector<int>* tokens = nullptr;
  const std::vector<desc::AtomAttributes>* attrs = nullptr;
};

class Aggregator {
 public:
  explicit Aggregator(AggregatorOptions opts = {});
  ~Aggregator();
  Aggregator(const Aggregator&);
  Aggregator(Aggregator&&) noexcept;
  Aggregator& operator=(Aggregator&&) noexcept;

  //! Throws MisalignedInput when the token or attribute list length differs from the atom count.
  void add(const mol::Molecule& mol, const std::vector<int>& tokens, const std::vector<desc::AtomAttributes>& attrs);
  //! Associative; exact while every token stays under the reservoir cap.
  void merge(const Aggregator& other);

  std::vector<AtomTokenProfile> profiles() const;
  const CorpusStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Aggregator aggregate(std::span<const CorpusItem> corpus, const AggregatorOptions& opts = {});
//! Sharded OpenMP aggregation; shards are merged in index order.
Aggregator aggregate_parallel(std::span<const CorpusItem> corpus, const AggregatorOptions& opts = {},
                              int shards = 0);

nlohmann::ordered_json profile_to_json(const AtomTokenProfile& p);
//! pointer prefixes any SchemaViolation raised for this record.
AtomTokenProfile profile_from_json(const nlohmann::ordered_json& j, const std::string& pointer = "");

std::string dump_kb(const std::vector<AtomTokenProfile>& profiles);
std::vector<AtomTokenProfile> parse_kb(const std::string& text);
void save_kb(const std::string& path, const std::vector<AtomTokenProfile>& profiles);
std::vector<AtomTokenProfile> load_kb(const std::string& path);

//! Token id -> profile lookup.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::vector<AtomTokenProfile> profiles);
  const AtomTokenProfile* find(int token) const;
  const std::vector<AtomTokenProfile>& profiles() const { return profiles_; }

 private:
  std::vector<AtomTokenProfile> profiles_;
  std::map<int, std::size_t> by_token_;
};

}  // namespace atomprior::kb
