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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <random>

#include "atomprior/knowledge_base.hpp"
#include "generators.hpp"

namespace atomprior::kb {
namespace {

TEST(Stats, MedianAndIqr) {
  EXPECT_DOUBLE_EQ(median({1.0, 2.0, 3.0}), 2.0);
  EXPECT_NEAR(median({0.0, 0.1, 0.2, 0.3}), 0.15, 1e-15);
  EXPECT_NEAR(iqr({0.0, 0.1, 0.2, 0.3}), 0.15, 1e-15);
  EXPECT_EQ(median({}), 0.0);
  EXPECT_EQ(iqr({4.0}), 0.0);
}

TEST(Stats, LowMedianIsAnInput) {
  EXPECT_EQ(low_median({-1, 1}), -1);
  EXPECT_EQ(low_median({1, 0, 1}), 1);
  EXPECT_EQ(low_median({}), 0);
}

TEST(Stats, Entropy) {
  EXPECT_EQ(normalized_entropy({10}), 0.0);
  EXPECT_NEAR(normalized_entropy({5, 5}), 1.0, 1e-15);
  EXPECT_NEAR(normalized_entropy({3, 3, 3}), 1.0, 1e-15);
  const double h = normalized_entropy({26016, 23689, 3});
  EXPECT_GT(h, 0.0);
  EXPECT_LT(h, 1.0);
  // Base-2 Shannon entropy reproduces the reference record.
  EXPECT_NEAR(entropy_bits({26016, 23689, 3}), 0.9992911271, 1e-9);
}

CorpusStats stats_from(std::map<int, std::int64_t> tokens, std::map<std::pair<int, int>, std::int64_t> pairs) {
  CorpusStats s;
  s.token_counts = std::move(tokens);
  s.pair_counts = std::move(pairs);
  for (const auto& [k, v] : s.token_counts) {
    s.total_atoms += v;
  }
  for (const auto& [k, v] : s.pair_counts) {
    s.total_adjacent_pairs += v;
  }
  return s;
}

TEST(Pmi, HalfHalfQuarterIsZero) {
  // P(t) = P(u) = 0.5, P(t,u) = 0.25.
  const CorpusStats s = stats_from({{0, 2}, {1, 2}}, {{{0, 1}, 1}, {{0, 0}, 2}, {{1, 1}, 1}});
  EXPECT_NEAR(pmi(0, 1, s), 0.0, 1e-15);
}

TEST(Pmi, QuartersGiveTwo) {
  // P(t) = P(u) = 0.25, P(t,u) = 0.25.
  const CorpusStats s = stats_from({{0, 1}, {1, 1}, {2, 2}}, {{{0, 1}, 1}, {{2, 2}, 3}});
  EXPECT_NEAR(pmi(0, 1, s), 2.0, 1e-15);
  EXPECT_EQ(pmi(0, 1, s), pmi(1, 0, s));
}

TEST(Pmi, UnseenPairIsNegativeInfinity) {
  const CorpusStats s = stats_from({{0, 1}, {1, 1}, {2, 2}}, {{{0, 1}, 1}, {{2, 2}, 3}});
  EXPECT_EQ(pmi(0, 2, s), -std::numeric_limits<double>::infinity());
  EXPECT_THROW(pmi(0, 9, s), std::out_of_range);
  for (const auto& n : top_neighbors(0, s, 5)) {
    EXPECT_NE(n.token, 2);
  }
}

TEST(Neighbors, SinglePartnerCoOccurrenceOne) {
  // Token 0 is always bonded to token 1 (C-O pairs).
  mol::Molecule m = mol::parse_smiles("CO.CO");
  std::vector<int> tokens = {0, 1, 0, 1};
  const auto attrs = desc::atom_attributes(m);
  Aggregator agg;
  agg.add(m, tokens, attrs);
  const auto nb = top_neighbors(0, agg.stats(), 5);
  ASSERT_EQ(nb.size(), 1u);
  EXPECT_EQ(nb[0].token, 1);
  EXPECT_DOUBLE_EQ(nb[0].co_occur_ratio, 1.0);
}

TEST(Neighbors, ToyCorpusMatchesBruteForce) {
  const auto corpus = testing::toy_corpus(60, 101, 3);
  Aggregator agg;
  for (const auto& it : corpus) {
    agg.add(it.mol, it.tokens, it.attrs);
  }
  // Brute force: count every bond and every atom directly.
  std::map<int, double> n_tok;
  std::map<std::pair<int, int>, double> n_pair;
  std::map<std::pair<int, int>, double> has_nb;
  double atoms = 0.0, bonds = 0.0;
  for (const auto& it : corpus) {
    for (std::size_t i = 0; i < it.mol.num_atoms(); ++i) {
      n_tok[it.tokens[i]] += 1;
      atoms += 1;
      std::set<int> nbt;
      for (const auto& b : it.mol.bonds) {
        if (b.a == static_cast<int>(i)) nbt.insert(it.tokens[b.b]);
        if (b.b == static_cast<int>(i)) nbt.insert(it.tokens[b.a]);
      }
      for (int u : nbt) has_nb[{it.tokens[i], u}] += 1;
    }
    for (const auto& b : it.mol.bonds) {
      const int x = it.tokens[b.a], y = it.tokens[b.b];
      n_pair[{std::min(x, y), std::max(x, y)}] += 1;
      bonds += 1;
    }
  }
  for (const auto& [t, nt] : n_tok) {
    std::vector<NeighborStat> expect;
    for (const auto& [u, nu] : n_tok) {
      const auto ip = n_pair.find({std::min(t, u), std::max(t, u)});
      if (ip == n_pair.end()) continue;
      const double v = std::log2((ip->second / bonds) / ((nt / atoms) * (nu / atoms)));
      expect.push_back({u, v, has_nb[{t, u}] / nt});
    }
    std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
      return a.pmi != b.pmi ? a.pmi > b.pmi : a.token < b.token;
    });
    if (expect.size() > 5) expect.resize(5);
    const auto got = top_neighbors(t, agg.stats(), 5);
    ASSERT_EQ(got.size(), expect.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      EXPECT_EQ(got[k].token, expect[k].token);
      EXPECT_NEAR(got[k].pmi, expect[k].pmi, 1e-12);
      EXPECT_NEAR(got[k].co_occur_ratio, expect[k].co_occur_ratio, 1e-12);
    }
  }
}

TEST(Aggregate, MisalignedInput) {
  const auto m = mol::parse_smiles("CCO");
  const auto attrs = desc::atom_attributes(m);
  Aggregator agg;
  EXPECT_THROW(agg.add(m, {0, 1}, attrs), MisalignedInput);
}

TEST(Aggregate, DegreeMedianAndModes) {
  // Token 7 on all of propane's carbons: degrees 1, 2, 1.
  const auto m = mol::parse_smiles("CCC");
  Aggregator agg;
  agg.add(m, {7, 7, 7}, desc::atom_attributes(m));
  const auto p = agg.profiles();
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].support_count, 3);
  EXPECT_EQ(p[0].median_degree, 1.0);
  EXPECT_EQ(p[0].primary_symbol, "C");
  EXPECT_FALSE(p[0].is_mixed);
  EXPECT_EQ(p[0].env_type, "chain");
  EXPECT_EQ(p[0].hybridization, "sp3");
}

class ToyCorpusKb : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { corpus_ = new std::vector<testing::ToyItem>(testing::toy_corpus(200, 77)); }
  static void TearDownTestSuite() { delete corpus_; }
  static std::vector<CorpusItem> items(const std::vector<testing::ToyItem>& c) {
    std::vector<CorpusItem> out;
    for (const auto& it : c) {
      out.push_back({&it.mol, &it.tokens, &it.attrs});
    }
    return out;
  }
  static std::vector<testing::ToyItem>* corpus_;
};
std::vector<testing::ToyItem>* ToyCorpusKb::corpus_ = nullptr;

TEST_F(ToyCorpusKb, ProfileInvariants) {
  const auto profiles = aggregate(items(*corpus_)).profiles();
  ASSERT_FALSE(profiles.empty());
  for (const auto& p : profiles) {
    std::int64_t sym = 0, env = 0;
    for (const auto& [s, c] : p.symbol_distribution) sym += c;
    for (const auto& [s, c] : p.env_distribution) env += c;
    EXPECT_EQ(sym, p.support_count);
    EXPECT_EQ(env, p.support_count);
    for (double r : {p.aromatic_ratio, p.conjugated_ratio, p.hbond.donor_ratio, p.hbond.acceptor_ratio,
                     p.mixture_entropy, p.ring_ratio()}) {
      EXPECT_GE(r, 0.0);
      EXPECT_LE(r, 1.0);
    }
    const double arom = p.aromatic_ratio * static_cast<double>(p.support_count);
    EXPECT_NEAR(arom, std::round(arom), 1e-6);
    for (std::size_t k = 1; k < p.neighbors_top.size(); ++k) {
      EXPECT_GE(p.neighbors_top[k - 1].pmi, p.neighbors_top[k].pmi);
    }
    for (const auto& n : p.neighbors_top) {
      EXPECT_GE(n.co_occur_ratio, 0.0);
      EXPECT_LE(n.co_occur_ratio, 1.0);
    }
  }
  std::int64_t total = 0;
  const Aggregator agg = aggregate(items(*corpus_));
  const CorpusStats& st = agg.stats();
  for (const auto& [t, c] : st.token_counts) total += c;
  EXPECT_EQ(total, st.total_atoms);
  for (const auto& [k, c] : st.pair_counts) {
    EXPECT_TRUE(st.token_counts.count(k.first) && st.token_counts.count(k.second));
  }
}

TEST_F(ToyCorpusKb, PmiSymmetric) {
  const auto agg = aggregate(items(*corpus_));
  const auto& st = agg.stats();
  for (const auto& [a, ca] : st.token_counts) {
    for (const auto& [b, cb] : st.token_counts) {
      const double x = pmi(a, b, st), y = pmi(b, a, st);
      if (std::isinf(x)) {
        EXPECT_TRUE(std::isinf(y));
      } else {
        EXPECT_EQ(x, y);
      }
    }
  }
}

TEST_F(ToyCorpusKb, OrderIndependent) {
  auto shuffled = items(*corpus_);
  std::mt19937_64 rng(9);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  EXPECT_EQ(aggregate(items(*corpus_)).profiles(), aggregate(shuffled).profiles());
}

TEST_F(ToyCorpusKb, MergeEqualsSinglePass) {
  const auto all = items(*corpus_);
  const std::span<const CorpusItem> s(all);
  Aggregator a = aggregate(s.subspan(0, 70));
  const Aggregator b = aggregate(s.subspan(70, 60));
  const Aggregator c = aggregate(s.subspan(130));
  a.merge(b);
  a.merge(c);
  EXPECT_EQ(a.profiles(), aggregate(s).profiles());
  EXPECT_EQ(a.stats(), aggregate(s).stats());
}

TEST_F(ToyCorpusKb, ParallelMatchesSerial) {
  const auto all = items(*corpus_);
  const auto serial = aggregate(all).profiles();
  for (int shards : {1, 3, 8}) {
    EXPECT_EQ(aggregate_parallel(all, {}, shards).profiles(), serial) << shards;
  }
}

TEST_F(ToyCorpusKb, RoundTrip) {
  const auto profiles = aggregate(items(*corpus_)).profiles();
  EXPECT_EQ(parse_kb(dump_kb(profiles)), profiles);
  const auto path = (std::filesystem::temp_directory_path() / "atomprior_kb_test.json").string();
  save_kb(path, profiles);
  EXPECT_EQ(load_kb(path), profiles);
  std::remove(path.c_str());
}

TEST(Serialize, EmptyKb) {
  EXPECT_EQ(dump_kb({}).substr(0, 2), "[]");
  EXPECT_TRUE(parse_kb("[]").empty());
}

TEST(Serialize, ReferenceRecordParses) {
  const auto text = testing::read_file(testing::data_path("kb_example.json"));
  const auto p = profile_from_json(nlohmann::ordered_json::parse(text));
  EXPECT_EQ(p.token_id, 112);
  EXPECT_EQ(p.support_count, 49708);
  EXPECT_EQ(p.primary_symbol, "C");
  EXPECT_TRUE(p.is_mixed);
  ASSERT_EQ(p.symbol_distribution.size(), 3u);
  EXPECT_EQ(p.symbol_distribution[1], (std::pair<std::string, std::int64_t>{"O", 23689}));
  EXPECT_DOUBLE_EQ(p.mixture_entropy, 0.9992911271);
  EXPECT_EQ(p.hybridization, "sp3");
  EXPECT_DOUBLE_EQ(p.polarity.gasteiger_iqr, 0.4922527119);
  ASSERT_EQ(p.neighbors_top.size(), 5u);
  EXPECT_EQ(p.neighbors_top[4].token, 430);
  EXPECT_DOUBLE_EQ(p.neighbors_top[4].pmi, 0.5000017521);
  // Lossless: re-serializing and parsing again gives the same record.
  EXPECT_EQ(profile_from_json(profile_to_json(p)), p);
}

TEST(Serialize, UnknownFieldsPreserved) {
  auto j = nlohmann::ordered_json::parse(testing::read_file(testing::data_path("kb_example.json")));
  j["curator_note"] = {{"source", "manual"}, {"rev", 3}};
  const auto p = profile_from_json(j);
  EXPECT_EQ(p.extra["curator_note"]["rev"], 3);
  EXPECT_EQ(profile_to_json(p)["curator_note"], j["curator_note"]);
}

TEST(Serialize, SchemaViolationPointer) {
  auto j = nlohmann::ordered_json::parse(testing::read_file(testing::data_path("kb_example.json")));
  j["polarity"]["gasteiger_q50"] = "high";
  const nlohmann::ordered_json arr = nlohmann::ordered_json::array({j});
  try {
    parse_kb(arr.dump());
    FAIL();
  } catch (const SchemaViolation& e) {
    EXPECT_EQ(e.pointer(), "/0/polarity/gasteiger_q50");
  }
  j.erase("support_count");
  try {
    profile_from_json(j, "/3");
    FAIL();
  } catch (const SchemaViolation& e) {
    EXPECT_EQ(e.pointer(), "/3/support_count");
  }
}

TEST(Serialize, RandomizedProfilesRoundTrip) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> n(1, 1000);
  std::vector<AtomTokenProfile> ps;
  for (int k = 0; k < 50; ++k) {
    AtomTokenProfile p;
    p.token_id = k;
    p.support_count = n(rng);
    p.primary_symbol = "N";
    p.symbol_distribution = {{"N", p.support_count}};
    p.env_distribution = {{"ring", p.support_count}};
    p.env_type = "ring";
    p.mixture_entropy = std::abs(u(rng)) / 2;
    p.aromatic_ratio = std::abs(u(rng)) / 2;
    p.median_ring_size = 5.5;
    p.polarity.gasteiger_q50 = u(rng);
    p.polarity.gasteiger_iqr = std::abs(u(rng));
    p.electrics.inductive = -1;
    p.neighbors_top = {{n(rng), u(rng), std::abs(u(rng)) / 2}};
    ps.push_back(p);
  }
  EXPECT_EQ(parse_kb(dump_kb(ps)), ps);
}

TEST(KnowledgeBase, Lookup) {
  AtomTokenProfile a;
  a.token_id = 5;
  const KnowledgeBase kb({a});
  EXPECT_NE(kb.find(5), nullptr);
  EXPECT_EQ(kb.find(6), nullptr);
}

}  // namespace
}  // namespace atomprior::kb
