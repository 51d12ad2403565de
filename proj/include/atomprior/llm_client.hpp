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

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace atomprior::llm {

enum class Role { System, User, Assistant };
std::string_view to_string(Role r);
Role role_from_string(std::string_view s);

struct Message {
  Role role = Role::User;
  std::string content;
  bool operator==(const Message&) const = default;
};

struct ChatRequest {
  std::vector<Message> messages;
  double temperature = 0.0;
  int max_tokens = 2000;
  std::string model;

  //! Throws LlmError(InvalidRequest): empty messages, a system message that is not first, bad decoding values.
  void validate() const;
  //! Wire body: {model, messages, temperature, max_tokens}. Also the replay key.
  nlohmann::ordered_json to_json() const;
  static ChatRequest from_json(const nlohmann::json& j);
};

enum class FinishReason { Stop, Length, Other };

struct Usage {
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
};

struct ChatResponse {
  std::string content;
  FinishReason finish_reason = FinishReason::Stop;
  Usage usage;
  std::chrono::milliseconds latency{0};

  nlohmann::ordered_json to_json() const;
  static ChatResponse from_json(const nlohmann::json& j);
};

enum class LlmErrorKind {
  InvalidRequest,
  AuthError,
  RateLimited,
  Timeout,
  Transport,
  MalformedProviderResponse,
  ScriptExhausted,
  ReplayMiss
};
std::string_view to_string(LlmErrorKind k);

class LlmError : public std::runtime_error {
 public:
  LlmError(LlmErrorKind kind, const std::string& what);
  LlmErrorKind kind() const { return kind_; }

 private:
  LlmErrorKind kind_;
};

//! Implementations must accept concurrent chat calls.
class Provider {
 public:
  virtual ~Provider() = default;
  virtual ChatResponse chat(const ChatRequest& request) = 0;
};

//! Returns scripted replies in order, then throws ScriptExhausted.
class MockProvider final : public Provider {
 public:
  explicit MockProvider(std::vector<std::string> script);
  ChatResponse chat(const ChatRequest& request) override;
  std::size_t calls() const;
  //! Requests received so far, in call order.
  std::vector<ChatRequest> requests() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> script_;
  std::size_t next_ = 0;
  std::vector<ChatRequest> seen_;
};

struct JournalEntry {
  ChatRequest request;
  ChatResponse response;
  std::string timestamp;
};

//! Append-only JSON-lines log of {request, response, timestamp}; writes are serialized.
class Journal {
 public:
  using Clock = std::function<std::string()>;
  explicit Journal(const std::string& path, Clock clock = {});
  void append(const ChatRequest& request, const ChatResponse& response);
  const std::string& path() const { return path_; }

  static std::vector<JournalEntry> read(const std::string& path);
  //! UTC ISO-8601 with milliseconds.
  static std::string utc_now();

 private:
  std::mutex mu_;
  std::string path_;
  Clock clock_;
};

//! Answers from a recorded journal, matching on the exact request body. Identical requests
//! recorded more than once are served in recorded order; the last one repeats once exhausted.
class ReplayProvider final : public Provider {
 public:
  explicit ReplayProvider(const std::vector<JournalEntry>& entries);
  static ReplayProvider from_journal(const std::string& path);
  ChatResponse chat(const ChatRequest& request) override;

 private:
  std::mutex mu_;
  std::map<std::string, std::deque<ChatResponse>> by_request_;
};

class JournalingProvider final : public Provider {
 public:
  JournalingProvider(Provider& inner, Journal& journal) : inner_(inner), journal_(journal) {}
  ChatResponse chat(const ChatRequest& request) override;

 private:
  Provider& inner_;
  Journal& journal_;
};

struct HttpConfig {
  //! Full URL of the chat-completions endpoint, http or https.
  std::string endpoint;
  std::string model;
  //! Environment variable holding the bearer token; empty sends no Authorization header.
  std::string api_key_env = "OPENAI_API_KEY";
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::seconds timeout{120};
};

//! JSON chat-completions client with exponential backoff on 429, 5xx and transport failures.
class HttpProvider final : public Provider {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;
  explicit HttpProvider(HttpConfig config, Sleeper sleeper = {});
  ~HttpProvider() override;
  ChatResponse chat(const ChatRequest& request) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

//! Extracts choices[0].message.content, finish_reason and usage; throws MalformedProviderResponse.
ChatResponse parse_completion(const std::string& body);

}  // namespace atomprior::llm
