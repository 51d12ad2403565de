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

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "atomprior/atomcards.hpp"
#include "atomprior/eval.hpp"

namespace atomprior::eval {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::AtomPrior:
      return "atomprior";
    case Method::Direct:
      return "da";
    case Method::ChainOfThought:
      return "cot";
    case Method::Knn:
      return "knn";
    case Method::WeightedKnn:
      return "wknn";
  }
  return "?";
}

Method method_from_string(std::string_view s) {
  for (Method m : {Method::AtomPrior, Method::Direct, Method::ChainOfThought, Method::Knn, Method::WeightedKnn}) {
    if (to_string(m) == s) {
      return m;
    }
  }
  throw std::invalid_argument("unknown method: " + std::string(s));
}

namespace {

bool is_llm(Method m) { return m == Method::AtomPrior || m == Method::Direct || m == Method::ChainOfThought; }

bool classification(const BenchmarkConfig& cfg) { return cfg.task.kind == prompts::TaskKind::Classification; }

nlohmann::ordered_json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

RecordResult score_record(const Featurized& q, const std::string& smiles, double label,
                          const retrieval::AnalogueIndex& index, const BenchmarkConfig& cfg, const Resources& res) {
  RecordResult r;
  r.smiles = smiles;
  r.label = label;
  if (!q.ok) {
    r.error = "featurization failed: " + q.error;
    return r;
  }
  try {
    const std::vector<retrieval::Hit> hits =
        cfg.k == 0 ? std::vector<retrieval::Hit>{} : retrieval::top_k(q.fingerprint, index, cfg.k, smiles);
    if (cfg.method == Method::Knn || cfg.method == Method::WeightedKnn) {
      r.score = knn_predict(hits, index, cfg.method == Method::WeightedKnn);
      return r;
    }
    prompts::Prompt prompt;
    if (cfg.method == Method::AtomPrior) {
      prompt = atomprior_prompt(q, smiles, index, hits, cfg, *res.kb);
    } else {
      std::vector<prompts::LabeledExample> examples;
      if (cfg.few_shot) {
        for (const auto& h : hits) {
          const auto& e = index.entries[h.index];
          examples.push_back({e.smiles, cards::render_label(e.label, true)});
        }
      }
      prompt = prompts::baseline_prompt(
          cfg.method == Method::Direct ? prompts::BaselineStyle::Direct : prompts::BaselineStyle::ChainOfThought,
          cfg.task, smiles, examples);
    }
    const llm::ChatResponse resp = res.provider->chat(to_request(prompt, cfg));
    const prompts::ParsedAnswer a = prompts::parse_answer(resp.content, cfg.task.kind);
    r.warnings = a.warnings;
    if (classification(cfg)) {
      r.score = *a.confidence / 100.0;
      r.predicted_label = a.label;
      r.conflict = a.conflict;
    } else {
      r.score = a.value;
    }
  } catch (const std::exception& e) {
    r.score.reset();
    r.error = e.what();
  }
  return r;
}

EvalResult evaluate_label(const Dataset& data, const std::vector<Featurized>& feats, const Split& split,
                          std::size_t label_col, const BenchmarkConfig& cfg, const Resources& res) {
  const bool cls = classification(cfg);
  std::vector<const Featurized*> items;
  std::vector<std::string> smiles;
  std::vector<double> labels;
  for (std::size_t i : split.train) {
    const auto& y = data.records[i].labels[label_col];
    if (y) {
      items.push_back(&feats[i]);
      smiles.push_back(data.records[i].smiles);
      labels.push_back(*y);
    }
  }
  const retrieval::AnalogueIndex index = build_index(
      items, smiles, labels, cls ? retrieval::LabelKind::Classification : retrieval::LabelKind::Regression,
      cfg.features);

  std::vector<std::size_t> test;
  for (std::size_t i : split.test) {
    if (data.records[i].labels[label_col]) {
      test.push_back(i);
    }
  }
  EvalResult out;
  out.label_name = data.label_names[label_col];
  out.metric_name = cls ? "AUROC" : "RMSE";
  out.per_record.resize(test.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < test.size(); t = next++) {
      const std::size_t i = test[t];
      out.per_record[t] = score_record(feats[i], data.records[i].smiles, *data.records[i].labels[label_col], index,
                                       cfg, res);
    }
  };
  const int workers = is_llm(cfg.method) ? std::max(1, cfg.concurrency) : 1;
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& th : pool) {
    th.join();
  }

  std::vector<double> scores;
  std::vector<double> ys;
  for (const auto& r : out.per_record) {
    if (r.score) {
      scores.push_back(*r.score);
      ys.push_back(r.label);
      out.n_conflicts += r.conflict ? 1 : 0;
    } else {
      ++out.n_failed;
    }
  }
  out.n_scored = scores.size();
  out.value = std::numeric_limits<double>::quiet_NaN();
  if (!scores.empty()) {
    if (cls) {
      std::vector<int> yi(ys.begin(), ys.end());
      try {
        out.value = auroc(scores, yi);
      } catch (const DegenerateLabels&) {
      }
    } else {
      out.value = rmse(scores, ys);
    }
  }
  return out;
}

}  // namespace

llm::ChatRequest to_request(const prompts::Prompt& p, const BenchmarkConfig& cfg) {
  llm::ChatRequest req;
  req.messages = {{llm::Role::System, p.system}, {llm::Role::User, p.user}};
  req.temperature = cfg.temperature;
  req.max_tokens = cfg.max_tokens;
  req.model = cfg.model;
  return req;
}

prompts::Prompt atomprior_prompt(const Featurized& query, const std::string& smiles,
                                 const retrieval::AnalogueIndex& index, const std::vector<retrieval::Hit>& hits,
                                 const BenchmarkConfig& cfg, const kb::KnowledgeBase& kb) {
  const auto& sel = cfg.selection;
  const cards::PacketSource qs{smiles, &query.mol, &query.tokens, &query.attrs, query.descriptors};
  const cards::EvidencePacket qp =
      cards::build_evidence_packet(qs, std::nullopt, std::nullopt, sel.atom_features, sel.molecule_features, kb,
                                   cfg.budget);
  std::vector<cards::EvidencePacket> analogues;
  for (const auto& h : hits) {
    const retrieval::IndexEntry& e = index.entries.at(h.index);
    const mol::Molecule m = mol::parse_smiles(e.smiles);
    const auto attrs = desc::atom_attributes(m);
    const cards::PacketSource src{e.smiles, &m, &e.tokens, &attrs, e.descriptors};
    analogues.push_back(cards::build_evidence_packet(
        src, h.similarity, cards::render_label(e.label, index.kind == retrieval::LabelKind::Classification),
        sel.atom_features, sel.molecule_features, kb, cfg.budget));
  }
  return prompts::stage3_prompt(cfg.task, sel, qp, analogues);
}

BenchmarkResult run_benchmark(const Dataset& data, const Split& split, const BenchmarkConfig& cfg,
                              const Resources& res) {
  if (res.embed == nullptr || res.codebook == nullptr) {
    throw std::invalid_argument("benchmark needs an embedding provider and a codebook");
  }
  if (is_llm(cfg.method) && res.provider == nullptr) {
    throw std::invalid_argument("method " + std::string(to_string(cfg.method)) + " needs an LLM provider");
  }
  if (cfg.method == Method::AtomPrior && res.kb == nullptr) {
    throw std::invalid_argument("method atomprior needs a knowledge base");
  }
  if ((cfg.method == Method::Direct || cfg.method == Method::ChainOfThought) && !classification(cfg)) {
    throw std::invalid_argument("DA and CoT baselines are classification only");
  }
  if ((cfg.method == Method::Knn || cfg.method == Method::WeightedKnn) && cfg.k == 0) {
    throw std::invalid_argument("KNN baselines need k >= 1");
  }
  if (data.kind != cfg.task.kind) {
    throw std::invalid_argument("dataset kind does not match the task kind");
  }
  for (std::size_t i : split.train) {
    if (i >= data.records.size()) {
      throw std::invalid_argument("split index out of range");
    }
  }
  for (std::size_t i : split.test) {
    if (i >= data.records.size()) {
      throw std::invalid_argument("split index out of range");
    }
  }

  std::vector<std::string> smiles;
  for (const auto& r : data.records) {
    smiles.push_back(r.smiles);
  }
  const std::vector<Featurized> feats = featurize(smiles, *res.embed, *res.codebook, cfg.features);

  BenchmarkResult out;
  double sum = 0.0;
  std::size_t defined = 0;
  for (std::size_t c = 0; c < data.label_names.size(); ++c) {
    out.per_label.push_back(evaluate_label(data, feats, split, c, cfg, res));
    if (std::isfinite(out.per_label.back().value)) {
      sum += out.per_label.back().value;
      ++defined;
    }
  }
  out.macro = defined == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / static_cast<double>(defined);
  return out;
}

nlohmann::ordered_json EvalResult::to_json(bool with_records) const {
  nlohmann::ordered_json j = {{"label", label_name},       {"metric", metric_name}, {"value", number_or_null(value)},
                              {"n_scored", n_scored},      {"n_failed", n_failed},  {"n_conflicts", n_conflicts}};
  if (with_records) {
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& r : per_record) {
      nlohmann::ordered_json x = {{"smiles", r.smiles}, {"label", r.label}};
      x["score"] = r.score ? nlohmann::ordered_json(*r.score) : nlohmann::ordered_json(nullptr);
      if (r.predicted_label) {
        x["predicted"] = *r.predicted_label ? "yes" : "no";
      }
      if (r.conflict) {
        x["conflict"] = true;
      }
      if (!r.error.empty()) {
        x["error"] = r.error;
      }
      if (!r.warnings.empty()) {
        x["warnings"] = r.warnings;
      }
      recs.push_back(std::move(x));
    }
    j["records"] = std::move(recs);
  }
  return j;
}

nlohmann::ordered_json BenchmarkResult::to_json() const {
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (const auto& r : per_label) {
    labels.push_back(r.to_json(false));
  }
  return {{"macro", number_or_null(macro)}, {"labels", labels}};
}

}  // namespace atomprior::eval
