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

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cstdlib>
#include <thread>

#include "atomprior/llm_client.hpp"

namespace atomprior::llm {

ChatResponse parse_completion(const std::string& body) {
  const auto j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw LlmError(LlmErrorKind::MalformedProviderResponse, "response body is not a JSON object");
  }
  const auto choices = j.find("choices");
  if (choices == j.end() || !choices->is_array() || choices->empty()) {
    throw LlmError(LlmErrorKind::MalformedProviderResponse, "response has no choices");
  }
  const auto& c0 = (*choices)[0];
  if (!c0.contains("message") || !c0["message"].contains("content") || !c0["message"]["content"].is_string()) {
    throw LlmError(LlmErrorKind::MalformedProviderResponse, "choices[0].message.content missing");
  }
  ChatResponse r;
  r.content = c0["message"]["content"].get<std::string>();
  const std::string finish = c0.contains("finish_reason") && c0["finish_reason"].is_string()
                                 ? c0["finish_reason"].get<std::string>()
                                 : "stop";
  r.finish_reason = finish == "stop" ? FinishReason::Stop : finish == "length" ? FinishReason::Length : FinishReason::Other;
  if (j.contains("usage") && j["usage"].is_object()) {
    r.usage.prompt_tokens = j["usage"].value("prompt_tokens", std::int64_t{0});
    r.usage.completion_tokens = j["usage"].value("completion_tokens", std::int64_t{0});
  }
  return r;
}

struct HttpProvider::Impl {
  HttpConfig cfg;
  Sleeper sleep;
  std::string origin;
  std::string path;
};

HttpProvider::HttpProvider(HttpConfig config, Sleeper sleeper) : impl_(std::make_unique<Impl>()) {
  const std::string& url = config.endpoint;
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos || (url.compare(0, scheme_end, "http") != 0 && url.compare(0, scheme_end, "https") != 0)) {
    throw std::invalid_argument("endpoint must be an http(s) URL: " + url);
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  impl_->origin = url.substr(0, path_start);
  impl_->path = path_start == std::string::npos ? "/" : url.substr(path_start);
  impl_->cfg = std::move(config);
  impl_->sleep = sleeper ? std::move(sleeper) : [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

HttpProvider::~HttpProvider() = default;

ChatResponse HttpProvider::chat(const ChatRequest& request) {
  request.validate();
  const HttpConfig& cfg = impl_->cfg;
  ChatRequest req = request;
  if (req.model.empty()) {
    req.model = cfg.model;
  }
  const std::string body = req.to_json().dump();

  httplib::Headers headers;
  if (!cfg.api_key_env.empty()) {
    const char* key = std::getenv(cfg.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      throw LlmError(LlmErrorKind::AuthError, "environment variable " + cfg.api_key_env + " is not set");
    }
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  httplib::Client client(impl_->origin);
  const auto secs = static_cast<time_t>(cfg.timeout.count());
  client.set_connection_timeout(secs, 0);
  client.set_read_timeout(secs, 0);
  client.set_write_timeout(secs, 0);

  LlmErrorKind last_kind = LlmErrorKind::Transport;
  std::string last_what;
  std::chrono::milliseconds backoff = cfg.initial_backoff;
  const int attempts = std::max(1, cfg.max_attempts);
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    const auto t0 = std::chrono::steady_clock::now();
    auto res = client.Post(impl_->path, headers, body, "application/json");
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    if (!res) {
      const httplib::Error err = res.error();
      const bool timeout = err == httplib::Error::Read || err == httplib::Error::Write ||
                           err == httplib::Error::ConnectionTimeout;
      last_kind = timeout ? LlmErrorKind::Timeout : LlmErrorKind::Transport;
      last_what = httplib::to_string(err);
    } else if (res->status == 401 || res->status == 403) {
      throw LlmError(LlmErrorKind::AuthError, "endpoint returned HTTP " + std::to_string(res->status));
    } else if (res->status == 429) {
      last_kind = LlmErrorKind::RateLimited;
      last_what = "HTTP 429";
    } else if (res->status >= 500) {
      last_kind = LlmErrorKind::Transport;
      last_what = "HTTP " + std::to_string(res->status);
    } else if (res->status != 200) {
      throw LlmError(LlmErrorKind::MalformedProviderResponse, "endpoint returned HTTP " + std::to_string(res->status));
    } else {
      ChatResponse r = parse_completion(res->body);
      r.latency = elapsed;
      return r;
    }
    if (attempt < attempts) {
      impl_->sleep(backoff);
      backoff *= 2;
    }
  }
  throw LlmError(last_kind, last_what + " after " + std::to_string(attempts) + " attempts");
}

}  // namespace atomprior::llm
