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

#include "atomprior/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "atomprior/eval.hpp"
#include "atomprior/knowledge_base.hpp"
#include "atomprior/llm_client.hpp"
#include "atomprior/prompts.hpp"
#include "atomprior/retrieval.hpp"
#include "atomprior/tokenizer.hpp"

namespace atomprior::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string corpus;
  std::string codebook;
  std::string kb;
  std::string dataset;
  std::string index;
  std::string selection;
  std::string out_dir = "atomprior-out";

  int radius = 2;
  std::size_t nbits = 2048;
  std::size_t k = 5;
  std::size_t budget = 20;

  std::string endpoint;
  std::string model;
  double temperature = 0.0;
  int max_tokens = 2000;
  std::string key_env = "OPENAI_API_KEY";
  int concurrency = 4;
  int max_attempts = 5;
  std::string mock;
  std::string replay;

  std::string split = "random";
  double ratio = 0.9;
  std::uint64_t seed = 42;

  std::string task_name;
  std::string task_instruction;
  std::string task_kind = "classification";
  std::string smiles_column = "smiles";
  std::vector<std::string> label_columns;

  std::size_t codebook_size = 512;
  std::size_t codebook_sample = 2000;
  std::string entropy = "normalized";

  // Subcommand options.
  std::string query_smiles;
  bool dry_run = false;
  std::string method = "knn";
  bool few_shot = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw UsageError(std::string("missing required option ") + flag);
  }
}

prompts::TaskKind task_kind(const Options& o) {
  return o.task_kind == "regression" ? prompts::TaskKind::Regression : prompts::TaskKind::Classification;
}

prompts::Task make_task(const Options& o) {
  prompts::Task t;
  t.name = o.task_name.empty() && !o.dataset.empty() ? fs::path(o.dataset).stem().string() : o.task_name;
  t.instruction = o.task_instruction;
  t.kind = task_kind(o);
  return t;
}

tok::Codebook load_codebook(const Options& o) {
  require(o.codebook, "--codebook");
  return tok::Codebook::load(o.codebook);
}

prompts::FeatureSelection load_selection(const Options& o, std::ostream& err) {
  if (o.selection.empty()) {
    err << "note: no --selection given; using every schema feature without descriptions\n";
    return prompts::full_selection();
  }
  const auto parsed = prompts::parse_feature_selection(slurp(o.selection));
  for (const auto& w : parsed.warnings) {
    err << "selection: " << w << "\n";
  }
  return parsed.selection;
}

//! Provider chosen by --mock, --replay or --llm-endpoint, journaled into the output directory.
class ProviderStack {
 public:
  ProviderStack(const Options& o, const fs::path& journal_path) {
    if (!o.mock.empty()) {
      const auto j = nlohmann::json::parse(slurp(o.mock));
      inner_ = std::make_unique<llm::MockProvider>(j.get<std::vector<std::string>>());
    } else if (!o.replay.empty()) {
      inner_ = std::make_unique<llm::ReplayProvider>(llm::Journal::read(o.replay));
    } else if (!o.endpoint.empty()) {
      llm::HttpConfig cfg;
      cfg.endpoint = o.endpoint;
      cfg.model = o.model;
      cfg.api_key_env = o.key_env;
      cfg.max_attempts = o.max_attempts;
      inner_ = std::make_unique<llm::HttpProvider>(cfg);
    } else {
      throw UsageError("no model configured: give --llm-endpoint, --mock or --replay");
    }
    fs::create_directories(journal_path.parent_path());
    journal_ = std::make_unique<llm::Journal>(journal_path.string());
    outer_ = std::make_unique<llm::JournalingProvider>(*inner_, *journal_);
  }
  llm::Provider& get() { return *outer_; }

 private:
  std::unique_ptr<llm::Provider> inner_;
  std::unique_ptr<llm::Journal> journal_;
  std::unique_ptr<llm::JournalingProvider> outer_;
};

eval::Dataset load_data(const Options& o, std::ostream& err) {
  require(o.dataset, "--dataset");
  eval::Dataset d = eval::load_dataset(eval::read_csv(o.dataset), o.smiles_column, o.label_columns, task_kind(o));
  if (d.dropped > 0) {
    err << "dataset: dropped " << d.dropped << " rows\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(d.drop_reasons.size(), 5); ++i) {
      err << "  " << d.drop_reasons[i] << "\n";
    }
  }
  if (d.records.empty()) {
    throw std::runtime_error("dataset has no usable records");
  }
  return d;
}

eval::Split make_split(const Options& o, const eval::Dataset& d) {
  if (o.split == "random") {
    return eval::random_split(d.records.size(), o.ratio, o.seed);
  }
  std::vector<std::string> keys;
  for (const auto& r : d.records) {
    keys.push_back(eval::scaffold_key(mol::parse_smiles(r.smiles)));
  }
  return eval::scaffold_split(keys, o.ratio);
}

eval::BenchmarkConfig bench_config(const Options& o) {
  eval::BenchmarkConfig c;
  c.task = make_task(o);
  c.k = o.k;
  c.budget = o.budget;
  c.concurrency = o.concurrency;
  c.features.radius = o.radius;
  c.features.nbits = o.nbits;
  c.model = o.model;
  c.temperature = o.temperature;
  c.max_tokens = o.max_tokens;
  return c;
}

std::string fmt_metric(double v) {
  if (!std::isfinite(v)) {
    return "undefined";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// build-kb

std::vector<std::string> read_corpus(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<std::string> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      continue;
    }
    const auto e = line.find_first_of(" \t\r,", b);
    std::string smi = line.substr(b, e == std::string::npos ? std::string::npos : e - b);
    if (first && (smi == "smiles" || smi == "SMILES")) {
      first = false;
      continue;
    }
    first = false;
    out.push_back(std::move(smi));
  }
  return out;
}

int cmd_build_kb(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.corpus, "--corpus");
  const std::vector<std::string> corpus = read_corpus(o.corpus);
  const fs::path dir(o.out_dir);

  tok::Codebook codebook;
  std::string codebook_path = o.codebook;
  if (codebook_path.empty()) {
    const tok::InvariantEmbedding embed;
    std::vector<std::vector<double>> samples;
    std::size_t used = 0;
    for (const auto& s : corpus) {
      if (used >= o.codebook_sample) {
        break;
      }
      if (auto m = mol::try_parse_smiles(s)) {
        for (auto& v : embed.embed_all(*m)) {
          samples.push_back(std::move(v));
        }
        ++used;
      }
    }
    codebook = samples.empty() ? tok::Codebook{embed.dim(), {std::vector<double>(embed.dim(), 0.0)}}
                               : tok::build_codebook(samples, o.codebook_size);
    codebook_path = (dir / "codebook.json").string();
    fs::create_directories(dir);
    codebook.save(codebook_path);
    err << "codebook: " << codebook.size() << " codewords from " << used << " molecules -> " << codebook_path << "\n";
  } else {
    codebook = tok::Codebook::load(codebook_path);
  }
  const tok::InvariantEmbedding embed(codebook.dim);

  kb::AggregatorOptions aopts;
  aopts.entropy = o.entropy == "bits" ? kb::EntropyMode::Bits : kb::EntropyMode::Normalized;
  kb::Aggregator agg(aopts);
  std::size_t dropped = 0;
  std::size_t atoms = 0;
  constexpr std::size_t kChunk = 4096;
  for (std::size_t lo = 0; lo < corpus.size(); lo += kChunk) {
    const std::vector<std::string> chunk(corpus.begin() + static_cast<std::ptrdiff_t>(lo),
                                         corpus.begin() + static_cast<std::ptrdiff_t>(std::min(corpus.size(), lo + kChunk)));
    const auto feats = eval::featurize(chunk, embed, codebook, {o.radius, o.nbits});
    for (std::size_t i = 0; i < feats.size(); ++i) {
      if (!feats[i].ok) {
        ++dropped;
        if (dropped <= 10) {
          err << "skip line '" << chunk[i] << "': " << feats[i].error << "\n";
        }
        continue;
      }
      agg.add(feats[i].mol, feats[i].tokens, feats[i].attrs);
      atoms += feats[i].mol.num_atoms();
    }
  }
  if (!corpus.empty() && 2 * dropped > corpus.size()) {
    throw std::runtime_error("more than half of the corpus failed to parse (" + std::to_string(dropped) + " of " +
                             std::to_string(corpus.size()) + ")");
  }
  const auto profiles = agg.profiles();
  const fs::path kb_path = o.kb.empty() ? dir / "kb.json" : fs::path(o.kb);
  write_file(kb_path, kb::dump_kb(profiles));
  nlohmann::ordered_json summary = {{"molecules", corpus.size() - dropped},
                                    {"dropped", dropped},
                                    {"atoms", atoms},
                                    {"tokens_seen", profiles.size()},
                                    {"codebook", codebook_path},
                                    {"kb", kb_path.string()}};
  write_file(dir / "kb_summary.json", summary.dump(2) + "\n");
  out << summary.dump(2) << "\n";
  return kOk;
}

// index

int cmd_index(const Options& o, std::ostream& out, std::ostream& err) {
  const eval::Dataset d = load_data(o, err);
  if (d.label_names.size() != 1) {
    throw UsageError("index needs exactly one label column; use --label-columns");
  }
  const tok::Codebook codebook = load_codebook(o);
  const tok::InvariantEmbedding embed(codebook.dim);
  const eval::Split split = make_split(o, d);
  std::vector<std::string> smiles;
  std::vector<double> labels;
  for (std::size_t i : split.train) {
    if (d.records[i].labels[0]) {
      smiles.push_back(d.records[i].smiles);
      labels.push_back(*d.records[i].labels[0]);
    }
  }
  const auto feats = eval::featurize(smiles, embed, codebook, {o.radius, o.nbits});
  std::vector<const eval::Featurized*> items;
  for (const auto& f : feats) {
    items.push_back(&f);
  }
  const auto index = eval::build_index(
      items, smiles, labels,
      task_kind(o) == prompts::TaskKind::Regression ? retrieval::LabelKind::Regression
                                                    : retrieval::LabelKind::Classification,
      {o.radius, o.nbits});
  const std::string path = o.index.empty() ? (fs::path(o.out_dir) / "index.jsonl").string() : o.index;
  if (fs::path(path).has_parent_path()) {
    fs::create_directories(fs::path(path).parent_path());
  }
  retrieval::save_index(path, index);
  out << "index: " << index.entries.size() << " training entries -> " << path << "\n";
  return kOk;
}

// stage1

int cmd_stage1(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.task_instruction, "--task-instruction");
  const fs::path dir(o.out_dir);
  ProviderStack provider(o, dir / "journal.jsonl");
  const auto rounds = prompts::stage1_messages(o.task_instruction);
  llm::ChatRequest req;
  req.model = o.model;
  req.temperature = o.temperature;
  req.max_tokens = o.max_tokens;
  std::string last;
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    req.messages.push_back({llm::Role::System, rounds[r].system});
    req.messages.push_back({llm::Role::User, rounds[r].user});
    const auto resp = provider.get().chat(req);
    write_file(dir / ("stage1_round" + std::to_string(r + 1) + ".txt"), resp.content);
    req.messages.push_back({llm::Role::Assistant, resp.content});
    last = resp.content;
  }
  prompts::SelectionParse parsed;
  try {
    parsed = prompts::parse_feature_selection(last);
  } catch (const std::exception& e) {
    err << "stage1: could not parse the selection; raw reply saved to " << (dir / "stage1_round3.txt").string()
        << "\n";
    throw;
  }
  for (const auto& w : parsed.warnings) {
    err << "stage1: " << w << "\n";
  }
  const fs::path sel_path = o.selection.empty() ? dir / "selection.json" : fs::path(o.selection);
  write_file(sel_path, prompts::selection_to_json(parsed.selection).dump(2) + "\n");
  out << "selection: " << parsed.selection.atom_features.size() << " atom features, "
      << parsed.selection.molecule_features.size() << " molecule features -> " << sel_path.string() << "\n";
  return kOk;
}

// infer

int cmd_infer(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.query_smiles, "--smiles");
  std::string perr;
  if (!mol::try_parse_smiles(o.query_smiles, &perr)) {
    err << "error: cannot parse SMILES '" << o.query_smiles << "': " << perr << "\n";
    return kUsageError;
  }
  require(o.kb, "--kb");
  require(o.index, "--index");
  const tok::Codebook codebook = load_codebook(o);
  const tok::InvariantEmbedding embed(codebook.dim);
  const kb::KnowledgeBase kb(kb::load_kb(o.kb));
  const retrieval::AnalogueIndex index = retrieval::load_index(o.index);
  eval::BenchmarkConfig cfg = bench_config(o);
  cfg.selection = load_selection(o, err);
  if (cfg.task.kind == prompts::TaskKind::Classification && index.kind != retrieval::LabelKind::Classification) {
    throw UsageError("index holds regression labels but the task is classification");
  }
  const auto feats = eval::featurize({o.query_smiles}, embed, codebook, cfg.features);
  if (!feats[0].ok) {
    throw std::runtime_error(feats[0].error);
  }
  const auto hits = o.k == 0 ? std::vector<retrieval::Hit>{}
                             : retrieval::top_k(feats[0].fingerprint, index, o.k, o.query_smiles);
  const prompts::Prompt prompt = eval::atomprior_prompt(feats[0], o.query_smiles, index, hits, cfg, kb);
  if (o.dry_run) {
    out << prompt.text() << "\n";
    return kOk;
  }
  require(o.task_instruction, "--task-instruction");
  ProviderStack provider(o, fs::path(o.out_dir) / "journal.jsonl");
  const auto resp = provider.get().chat(eval::to_request(prompt, cfg));
  const auto a = prompts::parse_answer(resp.content, cfg.task.kind);
  nlohmann::ordered_json j = {{"smiles", o.query_smiles}};
  if (a.label) {
    j["answer"] = *a.label ? "yes" : "no";
    j["confidence"] = *a.confidence;
    j["conflict"] = a.conflict;
  }
  if (a.value) {
    j["prediction"] = *a.value;
  }
  j["analysis"] = a.analysis;
  j["warnings"] = a.warnings;
  out << j.dump(2) << "\n";
  return kOk;
}

// eval / baseline

int run_eval(const Options& o, eval::Method method, bool few_shot, std::ostream& out, std::ostream& err) {
  const eval::Dataset d = load_data(o, err);
  const tok::Codebook codebook = load_codebook(o);
  const tok::InvariantEmbedding embed(codebook.dim);
  eval::BenchmarkConfig cfg = bench_config(o);
  cfg.method = method;
  cfg.few_shot = few_shot;
  const fs::path dir(o.out_dir);

  std::unique_ptr<kb::KnowledgeBase> kb;
  if (method == eval::Method::AtomPrior) {
    require(o.kb, "--kb");
    kb = std::make_unique<kb::KnowledgeBase>(kb::load_kb(o.kb));
    cfg.selection = load_selection(o, err);
  }
  std::unique_ptr<ProviderStack> provider;
  if (method == eval::Method::AtomPrior || method == eval::Method::Direct || method == eval::Method::ChainOfThought) {
    require(o.task_instruction, "--task-instruction");
    provider = std::make_unique<ProviderStack>(o, dir / "journal.jsonl");
  }
  eval::Resources res;
  res.kb = kb.get();
  res.embed = &embed;
  res.codebook = &codebook;
  res.provider = provider ? &provider->get() : nullptr;

  const eval::Split split = make_split(o, d);
  const eval::BenchmarkResult result = eval::run_benchmark(d, split, cfg, res);

  nlohmann::ordered_json summary = result.to_json();
  summary["method"] = std::string(eval::to_string(method)) + (few_shot ? "-fs" : "");
  summary["k"] = o.k;
  summary["split"] = o.split;
  summary["train"] = split.train.size();
  summary["test"] = split.test.size();
  fs::create_directories(dir);
  write_file(dir / "results.json", summary.dump(2) + "\n");
  std::string lines;
  for (const auto& r : result.per_label) {
    for (auto rec : r.to_json(true)["records"]) {
      nlohmann::ordered_json line = {{"label_name", r.label_name}};
      for (auto& [key, v] : rec.items()) {
        line[key] = v;
      }
      lines += line.dump() + "\n";
    }
  }
  write_file(dir / "records.jsonl", lines);
  for (const auto& r : result.per_label) {
    out << r.label_name << ": " << r.metric_name << " " << fmt_metric(r.value) << " (scored " << r.n_scored
        << ", failed " << r.n_failed << ")\n";
  }
  if (result.per_label.size() > 1) {
    out << "macro: " << fmt_metric(result.macro) << "\n";
  }
  return kOk;
}

void add_root_options(CLI::App& app, Options& o) {
  app.add_option("--corpus", o.corpus, "SMILES corpus, one molecule per line")->group("Paths");
  app.add_option("--codebook", o.codebook, "Codebook JSON")->group("Paths");
  app.add_option("--kb", o.kb, "Knowledge base JSON")->group("Paths");
  app.add_option("--dataset", o.dataset, "Labeled CSV")->group("Paths");
  app.add_option("--index", o.index, "Analogue index (JSON lines)")->group("Paths");
  app.add_option("--selection", o.selection, "Feature selection JSON")->group("Paths");
  app.add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str()->group("Paths");

  app.add_option("--retrieval-radius", o.radius, "Morgan radius")->capture_default_str()->group("Retrieval");
  app.add_option("--retrieval-nbits", o.nbits, "Fingerprint width")->capture_default_str()->group("Retrieval");
  app.add_option("--retrieval-k", o.k, "Analogues per query (0 = zero-shot)")->capture_default_str()->group("Retrieval");
  app.add_option("--budget", o.budget, "Atom cards per molecule")->capture_default_str()->group("Retrieval");

  app.add_option("--llm-endpoint", o.endpoint, "Chat-completions URL")->group("LLM");
  app.add_option("--llm-model", o.model, "Model name")->group("LLM");
  app.add_option("--llm-temperature", o.temperature, "Sampling temperature")->capture_default_str()->group("LLM");
  app.add_option("--llm-max-tokens", o.max_tokens, "Output token cap")->capture_default_str()->group("LLM");
  app.add_option("--llm-key-env", o.key_env, "Environment variable with the API key")
      ->capture_default_str()
      ->group("LLM");
  app.add_option("--llm-concurrency", o.concurrency, "Requests in flight")
      ->capture_default_str()
      ->check(CLI::PositiveNumber)
      ->group("LLM");
  app.add_option("--llm-max-attempts", o.max_attempts, "Attempts per request")->capture_default_str()->group("LLM");
  app.add_option("--mock", o.mock, "JSON array of scripted replies instead of a live model")->group("LLM");
  app.add_option("--replay", o.replay, "Journal to replay instead of a live model")->group("LLM");

  app.add_option("--split", o.split, "random or scaffold")
      ->capture_default_str()
      ->check(CLI::IsMember({"random", "scaffold"}))
      ->group("Split");
  app.add_option("--split-ratio", o.ratio, "Training fraction")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0))
      ->group("Split");
  app.add_option("--seed", o.seed, "Random split seed")->capture_default_str()->group("Split");

  app.add_option("--task-name", o.task_name, "Short task name (default: dataset file stem)")->group("Task");
  app.add_option("--task-instruction", o.task_instruction, "Property statement given to the model")->group("Task");
  app.add_option("--task-kind", o.task_kind, "classification or regression")
      ->capture_default_str()
      ->check(CLI::IsMember({"classification", "regression"}))
      ->group("Task");
  app.add_option("--smiles-column", o.smiles_column, "SMILES column name")->capture_default_str()->group("Task");
  app.add_option("--label-columns", o.label_columns, "Label columns (default: all others)")
      ->delimiter(',')
      ->group("Task");

  app.add_option("--codebook-size", o.codebook_size, "Codewords when deriving a codebook")
      ->capture_default_str()
      ->group("Knowledge base");
  app.add_option("--codebook-sample", o.codebook_sample, "Molecules sampled when deriving a codebook")
      ->capture_default_str()
      ->group("Knowledge base");
  app.add_option("--entropy", o.entropy, "mixture_entropy scale: normalized or bits")
      ->capture_default_str()
      ->check(CLI::IsMember({"normalized", "bits"}))
      ->group("Knowledge base");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Atom-level prior knowledge pipeline for LLM molecular property prediction", "atomprior"};
  app.set_config("--config", "", "TOML-style key = value file; flags override it");
  app.require_subcommand(1);
  add_root_options(app, o);

  auto* build_kb = app.add_subcommand("build-kb", "Tokenize a corpus and aggregate the knowledge base")->fallthrough();
  auto* index = app.add_subcommand("index", "Fingerprint the training split into an analogue index")->fallthrough();
  auto* stage1 = app.add_subcommand("stage1", "Run the three-round feature selection dialogue")->fallthrough();
  auto* infer = app.add_subcommand("infer", "Predict one molecule")->fallthrough();
  infer->add_option("--smiles", o.query_smiles, "Query SMILES")->required();
  infer->add_flag("--dry-run", o.dry_run, "Print the prompt and stop");
  auto* evalc = app.add_subcommand("eval", "Benchmark the full pipeline on a dataset")->fallthrough();
  auto* baseline = app.add_subcommand("baseline", "Run a baseline: knn, wknn, da or cot")->fallthrough();
  baseline->add_option("--method", o.method, "knn, wknn, da or cot")
      ->capture_default_str()
      ->check(CLI::IsMember({"knn", "wknn", "da", "cot"}));
  baseline->add_flag("--few-shot", o.few_shot, "Show the k retrieved labeled analogues (da, cot)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    fs::create_directories(o.out_dir);
    write_file(fs::path(o.out_dir) / "config.toml", app.config_to_str(true, false));
    if (build_kb->parsed()) {
      return cmd_build_kb(o, out, err);
    }
    if (index->parsed()) {
      return cmd_index(o, out, err);
    }
    if (stage1->parsed()) {
      return cmd_stage1(o, out, err);
    }
    if (infer->parsed()) {
      return cmd_infer(o, out, err);
    }
    if (evalc->parsed()) {
      return run_eval(o, eval::Method::AtomPrior, false, out, err);
    }
    if (baseline->parsed()) {
      return run_eval(o, eval::method_from_string(o.method), o.few_shot, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace atomprior::cli
