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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "atomprior/descriptors.hpp"
#include "atomprior/knowledge_base.hpp"
#include "atomprior/llm_client.hpp"
#include "atomprior/molgraph.hpp"
#include "atomprior/prompts.hpp"
#include "atomprior/retrieval.hpp"
#include "atomprior/tokenizer.hpp"

namespace atomprior::eval {

class DegenerateLabels : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class EmptyPool : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// CSV input.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  //! Column index by name; throws std::out_of_range.
  std::size_t column(const std::string& name) const;
};
//! RFC 4180: quoted fields, doubled quotes, CRLF or LF line ends.
CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::string& path);

struct Record {
  std::string smiles;
  //! One entry per label column; empty cells are missing labels.
  std::vector<std::optional<double>> labels;
};

struct Dataset {
  std::vector<std::string> label_names;
  std::vector<Record> records;
  prompts::TaskKind kind = prompts::TaskKind::Classification;
  //! Rows dropped for unparseable SMILES or invalid labels.
  std::size_t dropped = 0;
  std::vector<std::string> drop_reasons;
};

//! label_columns empty means every column except the SMILES column. Classification labels must be 0 or 1.
Dataset load_dataset(const CsvTable& table, const std::string& smiles_column,
                     const std::vector<std::string>& label_columns, prompts::TaskKind kind);

// Splits.
enum class SplitKind { Random, Scaffold };

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

//! Seeded shuffle; the first floor(ratio * n) shuffled indices train.
Split random_split(std::size_t n, double train_ratio = 0.9, std::uint64_t seed = 42);

//! Key of the generic Bemis-Murcko framework: side chains pruned, every atom carbon, every bond single.
//! Acyclic molecules share the empty key.
std::string scaffold_key(const mol::Molecule& mol);

//! Scaffold groups by descending size (ties by first appearance) fill train up to ratio * n, the rest test.
Split scaffold_split(const std::vector<std::string>& keys, double train_ratio = 0.9);

// Metrics.
//! Mann-Whitney AUROC with ties counted one half. Throws DegenerateLabels or LengthMismatch.
double auroc(const std::vector<double>& scores, const std::vector<int>& labels);
//! Throws LengthMismatch, including for empty input.
double rmse(const std::vector<double>& preds, const std::vector<double>& labels);

//! Mean of the hit labels, or similarity-weighted mean; an all-zero weight sum falls back to the plain mean.
//! Throws EmptyPool when hits is empty.
double knn_predict(const std::vector<retrieval::Hit>& hits, const retrieval::AnalogueIndex& index, bool weighted);
double knn_predict(const retrieval::Fingerprint& query, const retrieval::AnalogueIndex& index, std::size_t k,
                   bool weighted, std::optional<std::string_view> exclude_smiles = std::nullopt);

// Featurization.
struct Featurized {
  bool ok = false;
  std::string error;
  mol::Molecule mol;
  std::vector<desc::AtomAttributes> attrs;
  std::vector<int> tokens;
  retrieval::Fingerprint fingerprint;
  desc::MoleculeDescriptors descriptors;
};

struct FeaturizeOptions {
  int radius = 2;
  std::size_t nbits = 2048;
};

//! Parse, perceive, describe, tokenize and fingerprint every SMILES. OpenMP over molecules.
std::vector<Featurized> featurize(const std::vector<std::string>& smiles, const tok::EmbeddingProvider& embed,
                                  const tok::Codebook& codebook, const FeaturizeOptions& opts = {});
//! Single-threaded reference with identical results.
std::vector<Featurized> featurize_serial(const std::vector<std::string>& smiles, const tok::EmbeddingProvider& embed,
                                         const tok::Codebook& codebook, const FeaturizeOptions& opts = {});

retrieval::AnalogueIndex build_index(const std::vector<const Featurized*>& items, const std::vector<std::string>& smiles,
                                     const std::vector<double>& labels, retrieval::LabelKind kind,
                                     const FeaturizeOptions& opts = {});

// Benchmark.
enum class Method { AtomPrior, Direct, ChainOfThought, Knn, WeightedKnn };
std::string_view to_string(Method m);
Method method_from_string(std::string_view s);

struct BenchmarkConfig {
  prompts::Task task;
  Method method = Method::AtomPrior;
  std::size_t k = 5;
  //! Baselines only: include the k retrieved (smiles, label) pairs.
  bool few_shot = false;
  std::size_t budget = 20;
  prompts::FeatureSelection selection;
  int concurrency = 4;
  FeaturizeOptions features;
  std::string model;
  double temperature = 0.0;
  int max_tokens = 2000;
};

struct Resources {
  const kb::KnowledgeBase* kb = nullptr;
  const tok::EmbeddingProvider* embed = nullptr;
  const tok::Codebook* codebook = nullptr;
  //! Required for the LLM methods.
  llm::Provider* provider = nullptr;
};

struct RecordResult {
  std::string smiles;
  double label = 0.0;
  //! Confidence / 100 for classification, the prediction for regression.
  std::optional<double> score;
  std::optional<bool> predicted_label;
  bool conflict = false;
  std::string error;
  std::vector<std::string> warnings;
};

struct EvalResult {
  std::string label_name;
  //! "AUROC" or "RMSE".
  std::string metric_name;
  //! NaN when the metric is undefined (no scored records or one class only).
  double value = 0.0;
  std::size_t n_scored = 0;
  std::size_t n_failed = 0;
  std::size_t n_conflicts = 0;
  std::vector<RecordResult> per_record;
  nlohmann::ordered_json to_json(bool with_records = false) const;
};

struct BenchmarkResult {
  std::vector<EvalResult> per_label;
  //! Mean over labels with a defined metric.
  double macro = 0.0;
  nlohmann::ordered_json to_json() const;
};

//! Scores every test record for every label, one-vs-rest. Record-level failures are counted, not imputed.
//! Throws std::invalid_argument on configuration errors.
BenchmarkResult run_benchmark(const Dataset& data, const Split& split, const BenchmarkConfig& cfg, const Resources& res);

//! Packets and prompt for one query against an index; shared by the benchmark and single-molecule inference.
prompts::Prompt atomprior_prompt(const Featurized& query, const std::string& smiles,
                                 const retrieval::AnalogueIndex& index, const std::vector<retrieval::Hit>& hits,
                                 const BenchmarkConfig& cfg, const kb::KnowledgeBase& kb);

llm::ChatRequest to_request(const prompts::Prompt& p, const BenchmarkConfig& cfg);

}  // namespace atomprior::eval
