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

#include <ctime>
#include <fstream>

#include "atomprior/llm_client.hpp"

namespace atomprior::llm {

std::string_view to_string(Role r) {
  switch (r) {
    case Role::System:
      return "system";
    case Role::User:
      return "user";
    case Role::Assistant:
      return "assistant";
  }
  return "user";
}

Role role_from_string(std::string_view s) {
  if (s == "system") {
    return Role::System;
  }
  if (s == "user") {
    return Role::User;
  }
  if (s == "assistant") {
    return Role::Assistant;
  }
  throw std::invalid_argument("unknown message role: " + std::string(s));
}

std::string_view to_string(LlmErrorKind k) {
  switch (k) {
    case LlmErrorKind::InvalidRequest:
      return "InvalidRequest";
    case LlmErrorKind::AuthError:
      return "AuthError";
    case LlmErrorKind::RateLimited:
      return "RateLimited";
    case LlmErrorKind::Timeout:
      return "Timeout";
    case LlmErrorKind::Transport:
      return "Transport";
    case LlmErrorKind::MalformedProviderResponse:
      return "MalformedProviderResponse";
    case LlmErrorKind::ScriptExhausted:
      return "ScriptExhausted";
    case LlmErrorKind::ReplayMiss:
      return "ReplayMiss";
  }
  return "?";
}

LlmError::LlmError(LlmErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void ChatRequest::validate() const {
  if (messages.empty()) {
    throw LlmError(LlmErrorKind::InvalidRequest, "request has no messages");
  }
  bool any_system = false;
  for (const auto& m : messages) {
    any_system = any_system || m.role == Role::System;
  }
  if (any_system && messages.front().role != Role::System) {
    throw LlmError(LlmErrorKind::InvalidRequest, "first message must be the system message");
  }
  if (!(temperature >= 0.0)) {
    throw LlmError(LlmErrorKind::InvalidRequest, "temperature must be non-negative");
  }
  if (max_tokens <= 0) {
    throw LlmError(LlmErrorKind::InvalidRequest, "max_tokens must be positive");
  }
}

nlohmann::ordered_json ChatRequest::to_json() const {
  nlohmann::ordered_json msgs = nlohmann::ordered_json::array();
  for (const auto& m : messages) {
    msgs.push_back({{"role", to_string(m.role)}, {"content", m.content}});
  }
  return {{"model", model}, {"messages", msgs}, {"temperature", temperature}, {"max_tokens", max_tokens}};
}

ChatRequest ChatRequest::from_json(const nlohmann::json& j) {
  ChatRequest r;
  r.model = j.value("model", "");
  r.temperature = j.value("temperature", 0.0);
  r.max_tokens = j.value("max_tokens", 2000);
  for (const auto& m : j.at("messages")) {
    r.messages.push_back({role_from_string(m.at("role").get<std::string>()), m.at("content").get<std::string>()});
  }
  return r;
}

namespace {

std::string_view finish_name(FinishReason f) {
  switch (f) {
    case FinishReason::Stop:
      return "stop";
    case FinishReason::Length:
      return "length";
    case FinishReason::Other:
      return "other";
  }
  return "other";
}

}  // namespace

nlohmann::ordered_json ChatResponse::to_json() const {
  return {{"content", content},
          {"finish_reason", finish_name(finish_reason)},
          {"usage", {{"prompt_tokens", usage.prompt_tokens}, {"completion_tokens", usage.completion_tokens}}},
          {"latency_ms", latency.count()}};
}

ChatResponse ChatResponse::from_json(const nlohmann::json& j) {
  ChatResponse r;
  r.content = j.at("content").get<std::string>();
  const std::string f = j.value("finish_reason", "stop");
  r.finish_reason = f == "stop" ? FinishReason::Stop : f == "length" ? FinishReason::Length : FinishReason::Other;
  if (j.contains("usage")) {
    r.usage.prompt_tokens = j["usage"].value("prompt_tokens", std::int64_t{0});
    r.usage.completion_tokens = j["usage"].value("completion_tokens", std::int64_t{0});
  }
  r.latency = std::chrono::milliseconds(j.value("latency_ms", std::int64_t{0}));
  return r;
}

MockProvider::MockProvider(std::vector<std::string> script) : script_(std::move(script)) {}

ChatResponse MockProvider::chat(const ChatRequest& request) {
  request.validate();
  std::lock_guard lock(mu_);
  if (next_ >= script_.size()) {
    throw LlmError(LlmErrorKind::ScriptExhausted,
                   "mock script has " + std::to_string(script_.size()) + " replies, call " + std::to_string(next_ + 1));
  }
  seen_.push_back(request);
  ChatResponse r;
  r.content = script_[next_++];
  return r;
}

std::size_t MockProvider::calls() const {
  std::lock_guard lock(mu_);
  return next_;
}

std::vector<ChatRequest> MockProvider::requests() const {
  std::lock_guard lock(mu_);
  return seen_;
}

Journal::Journal(const std::string& path, Clock clock) : path_(path), clock_(clock ? std::move(clock) : utc_now) {}

std::string Journal::utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<int>(ms));
  return buf;
}

void Journal::append(const ChatRequest& request, const ChatResponse& response) {
  nlohmann::ordered_json line = {
      {"request", request.to_json()}, {"response", response.to_json()}, {"timestamp", clock_()}};
  std::lock_guard lock(mu_);
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot append to journal: " + path_);
  }
  out << line.dump() << '\n';
}

std::vector<JournalEntry> Journal::read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open journal: " + path);
  }
  std::vector<JournalEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    try {
      const auto j = nlohmann::json::parse(line);
      out.push_back({ChatRequest::from_json(j.at("request")), ChatResponse::from_json(j.at("response")),
                     j.value("timestamp", "")});
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

ReplayProvider::ReplayProvider(const std::vector<JournalEntry>& entries) {
  for (const auto& e : entries) {
    by_request_[e.request.to_json().dump()].push_back(e.response);
  }
}

ReplayProvider ReplayProvider::from_journal(const std::string& path) { return ReplayProvider(Journal::read(path)); }

ChatResponse ReplayProvider::chat(const ChatRequest& request) {
  request.validate();
  std::lock_guard lock(mu_);
  auto it = by_request_.find(request.to_json().dump());
  if (it == by_request_.end() || it->second.empty()) {
    throw LlmError(LlmErrorKind::ReplayMiss, "request not found in journal");
  }
  ChatResponse r = it->second.front();
  if (it->second.size() > 1) {
    it->second.pop_front();
  }
  return r;
}

ChatResponse JournalingProvider::chat(const ChatRequest& request) {
  ChatResponse r = inner_.chat(request);
  journal_.append(request, r);
  return r;
}

}  // namespace atomprior::llm
