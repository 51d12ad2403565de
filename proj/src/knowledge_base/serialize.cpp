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

#include <fstream>
#include <set>
#include <sstream>

#include "atomprior/knowledge_base.hpp"

namespace atomprior::kb {

using nlohmann::ordered_json;

SchemaViolation::SchemaViolation(std::string pointer, const std::string& what)
    : std::runtime_error("schema violation at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what),
      pointer_(std::move(pointer)) {}

double AtomTokenProfile::ring_ratio() const {
  std::int64_t ring = 0;
  for (const auto& [env, count] : env_distribution) {
    if (env == "ring" || env == "fused_ring") {
      ring += count;
    }
  }
  return support_count == 0 ? 0.0 : static_cast<double>(ring) / static_cast<double>(support_count);
}

namespace {

ordered_json counts_to_json(const CountList& counts) {
  ordered_json o = ordered_json::object();
  for (const auto& [k, v] : counts) {
    o[k] = v;
  }
  return o;
}

const std::set<std::string>& known_fields() {
  static const std::set<std::string> kKnown = {
      "token_id",         "support_count",    "primary_symbol", "is_mixed",       "symbol_distribution",
      "mixture_entropy",  "env_type",         "env_distribution", "aromatic_ratio", "conjugated_ratio",
      "median_degree",    "median_ring_size", "hybridization",  "electrics",      "polarity",
      "hbond",            "hetero_r1_median", "neighbors_top"};
  return kKnown;
}

class Reader {
 public:
  Reader(const ordered_json& j, std::string pointer) : j_(j), ptr_(std::move(pointer)) {
    if (!j_.is_object()) {
      throw SchemaViolation(ptr_, "expected object");
    }
  }

  const ordered_json& field(const std::string& key) const {
    auto it = j_.find(key);
    if (it == j_.end()) {
      throw SchemaViolation(path(key), "missing field");
    }
    return *it;
  }

  std::string path(const std::string& key) const { return ptr_ + "/" + key; }

  double number(const std::string& key) const {
    const auto& v = field(key);
    if (!v.is_number()) {
      throw SchemaViolation(path(key), "expected number");
    }
    return v.get<double>();
  }

  std::int64_t integer(const std::string& key) const {
    const auto& v = field(key);
    if (!v.is_number_integer()) {
      throw SchemaViolation(path(key), "expected integer");
    }
    return v.get<std::int64_t>();
  }

  std::string string(const std::string& key) const {
    const auto& v = field(key);
    if (!v.is_string()) {
      throw SchemaViolation(path(key), "expected string");
    }
    return v.get<std::string>();
  }

  bool boolean(const std::string& key) const {
    const auto& v = field(key);
    if (!v.is_boolean()) {
      throw SchemaViolation(path(key), "expected boolean");
    }
    return v.get<bool>();
  }

  CountList counts(const std::string& key) const {
    const auto& v = field(key);
    if (!v.is_object()) {
      throw SchemaViolation(path(key), "expected object");
    }
    CountList out;
    for (const auto& [k, c] : v.items()) {
      if (!c.is_number_integer()) {
        throw SchemaViolation(path(key) + "/" + k, "expected integer");
      }
      out.emplace_back(k, c.get<std::int64_t>());
    }
    return out;
  }

  Reader nested(const std::string& key) const { return Reader(field(key), path(key)); }

 private:
  const ordered_json& j_;
  std::string ptr_;
};

}  // namespace

ordered_json profile_to_json(const AtomTokenProfile& p) {
  ordered_json j = ordered_json::object();
  j["token_id"] = p.token_id;
  j["support_count"] = p.support_count;
  j["primary_symbol"] = p.primary_symbol;
  j["is_mixed"] = p.is_mixed;
  j["symbol_distribution"] = counts_to_json(p.symbol_distribution);
  j["mixture_entropy"] = p.mixture_entropy;
  j["env_type"] = p.env_type;
  j["env_distribution"] = counts_to_json(p.env_distribution);
  j["aromatic_ratio"] = p.aromatic_ratio;
  j["conjugated_ratio"] = p.conjugated_ratio;
  j["median_degree"] = p.median_degree;
  j["median_ring_size"] = p.median_ring_size;
  j["hybridization"] = p.hybridization;
  j["electrics"] = {{"inductive", p.electrics.inductive}, {"resonance", p.electrics.resonance}};
  j["polarity"] = {{"gasteiger_q50", p.polarity.gasteiger_q50},
                   {"gasteiger_iqr", p.polarity.gasteiger_iqr},
                   {"tpsa_contrib_q50", p.polarity.tpsa_contrib_q50}};
  j["hbond"] = {{"donor_ratio", p.hbond.donor_ratio}, {"acceptor_ratio", p.hbond.acceptor_ratio}};
  j["hetero_r1_median"] = p.hetero_r1_median;
  ordered_json nbrs = ordered_json::array();
  for (const auto& n : p.neighbors_top) {
    nbrs.push_back({{"token", n.token}, {"pmi", n.pmi}, {"co_occur_ratio", n.co_occur_ratio}});
  }
  j["neighbors_top"] = std::move(nbrs);
  for (const auto& [k, v] : p.extra.items()) {
    j[k] = v;
  }
  return j;
}

AtomTokenProfile profile_from_json(const ordered_json& j, const std::string& pointer) {
  const Reader r(j, pointer);
  AtomTokenProfile p;
  p.token_id = static_cast<int>(r.integer("token_id"));
  p.support_count = r.integer("support_count");
  p.primary_symbol = r.string("primary_symbol");
  p.is_mixed = r.boolean("is_mixed");
  p.symbol_distribution = r.counts("symbol_distribution");
  p.mixture_entropy = r.number("mixture_entropy");
  p.env_type = r.string("env_type");
  p.env_distribution = r.counts("env_distribution");
  p.aromatic_ratio = r.number("aromatic_ratio");
  p.conjugated_ratio = r.number("conjugated_ratio");
  p.median_degree = r.number("median_degree");
  p.median_ring_size = r.number("median_ring_size");
  p.hybridization = r.string("hybridization");
  const Reader el = r.nested("electrics");
  p.electrics.inductive = static_cast<int>(el.integer("inductive"));
  p.electrics.resonance = static_cast<int>(el.integer("resonance"));
  const Reader pol = r.nested("polarity");
  p.polarity.gasteiger_q50 = pol.number("gasteiger_q50");
  p.polarity.gasteiger_iqr = pol.number("gasteiger_iqr");
  p.polarity.tpsa_contrib_q50 = pol.number("tpsa_contrib_q50");
  const Reader hb = r.nested("hbond");
  p.hbond.donor_ratio = hb.number("donor_ratio");
  p.hbond.acceptor_ratio = hb.number("acceptor_ratio");
  p.hetero_r1_median = r.number("hetero_r1_median");
  const auto& nbrs = r.field("neighbors_top");
  if (!nbrs.is_array()) {
    throw SchemaViolation(r.path("neighbors_top"), "expected array");
  }
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const Reader n(nbrs[i], r.path("neighbors_top") + "/" + std::to_string(i));
    p.neighbors_top.push_back({static_cast<int>(n.integer("token")), n.number("pmi"), n.number("co_occur_ratio")});
  }
  for (const auto& [k, v] : j.items()) {
    if (known_fields().count(k) == 0) {
      p.extra[k] = v;
    }
  }
  return p;
}

std::string dump_kb(const std::vector<AtomTokenProfile>& profiles) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : profiles) {
    arr.push_back(profile_to_json(p));
  }
  return arr.dump(2) + "\n";
}

std::vector<AtomTokenProfile> parse_kb(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaViolation("", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) {
    throw SchemaViolation("", "expected array of profiles");
  }
  std::vector<AtomTokenProfile> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(profile_from_json(j[i], "/" + std::to_string(i)));
  }
  return out;
}

void save_kb(const std::string& path, const std::vector<AtomTokenProfile>& profiles) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write knowledge base: " + path);
  }
  out << dump_kb(profiles);
}

std::vector<AtomTokenProfile> load_kb(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open knowledge base: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_kb(ss.str());
}

KnowledgeBase::KnowledgeBase(std::vector<AtomTokenProfile> profiles) : profiles_(std::move(profiles)) {
  for (std::size_t i = 0; i < profiles_.size(); ++i) {
    by_token_[profiles_[i].token_id] = i;
  }
}

const AtomTokenProfile* KnowledgeBase::find(int token) const {
  const auto it = by_token_.find(token);
  return it == by_token_.end() ? nullptr : &profiles_[it->second];
}

}  // namespace atomprior::kb
