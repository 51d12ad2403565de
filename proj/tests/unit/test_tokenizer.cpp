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

#include <cstdio>
#include <filesystem>
#include <random>

#include <nlohmann/json.hpp>

#include "atomprior/tokenizer.hpp"
#include "generators.hpp"

namespace atomprior::tok {
namespace {

using mol::parse_smiles;

Codebook line_codebook(std::vector<double> xs) {
  Codebook cb;
  cb.dim = 1;
  for (double x : xs) {
    cb.codewords.push_back({x});
  }
  return cb;
}

TEST(Assign, ExactCodeword) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  Codebook cb;
  cb.dim = 8;
  for (int j = 0; j < 10; ++j) {
    std::vector<double> v(8);
    for (auto& x : v) {
      x = g(rng);
    }
    cb.codewords.push_back(v);
  }
  for (int j = 0; j < 10; ++j) {
    EXPECT_EQ(assign_token(cb.codewords[static_cast<std::size_t>(j)], cb), j);
  }
}

TEST(Assign, OneDimensional) {
  const Codebook cb = line_codebook({0.0, 1.0});
  const std::vector<double> a{0.4};
  const std::vector<double> tie{0.5};
  EXPECT_EQ(assign_token(a, cb), 0);
  EXPECT_EQ(assign_token(tie, cb), 0);
}

TEST(Assign, TieGoesToLowestIndex) {
  const Codebook cb = line_codebook({2.0, -1.0, 1.0, -1.0});
  const std::vector<double> e{0.0};
  EXPECT_EQ(assign_token(e, cb), 1);
}

TEST(Assign, DimensionMismatch) {
  const Codebook cb = line_codebook({0.0});
  const std::vector<double> e{0.0, 1.0};
  EXPECT_THROW(assign_token(e, cb), DimensionMismatch);
}

TEST(Codebook, ValidateAndRoundTrip) {
  Codebook bad;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad.dim = 2;
  bad.codewords = {{1.0, 2.0}, {1.0}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);

  const Codebook cb = line_codebook({0.25, -3.5});
  const Codebook back = Codebook::from_json(cb.to_json());
  EXPECT_EQ(back.dim, cb.dim);
  EXPECT_EQ(back.codewords, cb.codewords);

  const auto path = (std::filesystem::temp_directory_path() / "atomprior_codebook_test.json").string();
  cb.save(path);
  EXPECT_EQ(Codebook::load(path).codewords, cb.codewords);
  std::remove(path.c_str());
}

TEST(Embedding, PropaneMethylsMatch) {
  const auto m = parse_smiles("CCC");
  EXPECT_EQ(default_invariant_embedding(m, 0), default_invariant_embedding(m, 2));
  EXPECT_NE(default_invariant_embedding(m, 0), default_invariant_embedding(m, 1));
}

TEST(Embedding, AromaticDiffersFromAliphatic) {
  EXPECT_NE(default_invariant_embedding(parse_smiles("c1ccccc1"), 0),
            default_invariant_embedding(parse_smiles("C1CCCCC1"), 0));
}

TEST(Embedding, DeterministicAcrossParses) {
  const InvariantEmbedding e;
  EXPECT_EQ(e.dim(), 64u);
  EXPECT_EQ(e.embed_all(parse_smiles("CC(=O)Nc1ccc(O)cc1")), e.embed_all(parse_smiles("CC(=O)Nc1ccc(O)cc1")));
}

TEST(Tokenize, SingleAtomSingleCodeword) {
  const InvariantEmbedding e;
  Codebook cb;
  cb.dim = e.dim();
  cb.codewords = {std::vector<double>(e.dim(), 0.0)};
  const TokenSequence ts = tokenize(parse_smiles("C"), e, cb);
  EXPECT_EQ(ts.tokens, std::vector<int>{0});
  EXPECT_EQ(ts.rendered(), "A0");
}

TEST(Tokenize, RenderConvention) { EXPECT_EQ(render_tokens({410, 188, 434}), "A410 A188 A434"); }

TEST(Tokenize, DimensionMismatchPropagates) {
  const InvariantEmbedding e(16);
  const Codebook cb = line_codebook({0.0});
  EXPECT_THROW(tokenize(parse_smiles("CC"), e, cb), DimensionMismatch);
}

class TokenizeCorpus : public ::testing::Test {
 protected:
  void SetUp() override {
    smiles = testing::random_smiles_set(120, 23);
    std::vector<std::vector<double>> samples;
    for (const auto& s : smiles) {
      for (auto& v : embed.embed_all(parse_smiles(s))) {
        samples.push_back(std::move(v));
      }
    }
    codebook = build_codebook(samples, 64);
  }
  InvariantEmbedding embed;
  Codebook codebook;
  std::vector<std::string> smiles;
};

TEST_F(TokenizeCorpus, CountAndRange) {
  EXPECT_LE(codebook.size(), 64u);
  for (const auto& s : smiles) {
    const auto m = parse_smiles(s);
    const auto ts = tokenize(m, embed, codebook);
    ASSERT_EQ(ts.tokens.size(), m.num_atoms());
    for (int t : ts.tokens) {
      EXPECT_GE(t, 0);
      EXPECT_LT(t, static_cast<int>(codebook.size()));
    }
  }
}

TEST_F(TokenizeCorpus, RespellingInvariantAsMultiset) {
  std::uint64_t seed = 0;
  for (const auto& s : smiles) {
    const auto m = parse_smiles(s);
    const auto r = parse_smiles(mol::write_smiles(m, {.random_seed = ++seed}));
    auto a = tokenize(m, embed, codebook).tokens;
    auto b = tokenize(r, embed, codebook).tokens;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b) << s;
  }
}

TEST_F(TokenizeCorpus, ReferenceAnalogueHas35Tokens) {
  const auto m = parse_smiles("Fc1cc(cc(F)c1)CC(NC(=O)C)C(O)C[NH2+]C1(CCCCC1)c1cc(ccc1)C1CCOC1");
  EXPECT_EQ(tokenize(m, embed, codebook).tokens.size(), 35u);
}

TEST(BuildCodebook, MostFrequentFirst) {
  const std::vector<std::vector<double>> s = {{1.0}, {2.0}, {2.0}, {3.0}, {3.0}, {3.0}};
  const Codebook cb = build_codebook(s, 2);
  ASSERT_EQ(cb.size(), 2u);
  EXPECT_EQ(cb.codewords[0], std::vector<double>{3.0});
  EXPECT_EQ(cb.codewords[1], std::vector<double>{2.0});
}

}  // namespace
}  // namespace atomprior::tok
