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

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "atomprior/llm_client.hpp"

namespace atomprior::llm {
namespace {

namespace fs = std::filesystem;

ChatRequest simple_request(const std::string& user) {
  ChatRequest r;
  r.messages = {{Role::System, "sys"}, {Role::User, user}};
  r.model = "m";
  return r;
}

LlmErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const LlmError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no LlmError thrown";
  return LlmErrorKind::Transport;
}

fs::path temp_file(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("atomprior_llm_" + std::to_string(::getpid()) + "_" + name);
  fs::remove(p);
  return p;
}

TEST(Request, Validation) {
  ChatRequest r;
  EXPECT_EQ(kind_of([&] { r.validate(); }), LlmErrorKind::InvalidRequest);
  r.messages = {{Role::User, "u"}, {Role::System, "s"}};
  EXPECT_EQ(kind_of([&] { r.validate(); }), LlmErrorKind::InvalidRequest);
  r.messages = {{Role::User, "u"}};
  EXPECT_NO_THROW(r.validate());
  r.max_tokens = 0;
  EXPECT_EQ(kind_of([&] { r.validate(); }), LlmErrorKind::InvalidRequest);
  r.max_tokens = 10;
  r.temperature = -1;
  EXPECT_EQ(kind_of([&] { r.validate(); }), LlmErrorKind::InvalidRequest);
}

TEST(Request, JsonRoundTrip) {
  const ChatRequest r = simple_request("hello");
  const auto j = r.to_json();
  EXPECT_EQ(j.dump(),
            R"({"model":"m","messages":[{"role":"system","content":"sys"},{"role":"user","content":"hello"}],)"
            R"("temperature":0.0,"max_tokens":2000})");
  const ChatRequest back = ChatRequest::from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.messages, r.messages);
  EXPECT_EQ(back.model, "m");
  EXPECT_EQ(back.max_tokens, 2000);
}

TEST(Mock, RepliesInOrderThenExhausts) {
  MockProvider mock({"a", "b", "c"});
  EXPECT_EQ(mock.chat(simple_request("1")).content, "a");
  EXPECT_EQ(mock.chat(simple_request("2")).content, "b");
  EXPECT_EQ(mock.chat(simple_request("3")).content, "c");
  EXPECT_EQ(kind_of([&] { mock.chat(simple_request("4")); }), LlmErrorKind::ScriptExhausted);
  EXPECT_EQ(mock.calls(), 3u);
  ASSERT_EQ(mock.requests().size(), 3u);
  EXPECT_EQ(mock.requests()[1].messages[1].content, "2");
}

TEST(Mock, RejectsInvalidBeforeConsuming) {
  MockProvider mock({"a"});
  EXPECT_EQ(kind_of([&] { mock.chat(ChatRequest{}); }), LlmErrorKind::InvalidRequest);
  EXPECT_EQ(mock.chat(simple_request("x")).content, "a");
}

TEST(Journal, AppendAndRead) {
  const fs::path p = temp_file("journal.jsonl");
  int tick = 0;
  Journal j(p.string(), [&] { return "t" + std::to_string(tick++); });
  ChatResponse r1;
  r1.content = "one\nline two";
  r1.usage = {5, 7};
  ChatResponse r2;
  r2.content = "two";
  r2.finish_reason = FinishReason::Length;
  j.append(simple_request("q1"), r1);
  j.append(simple_request("q2"), r2);

  const auto entries = Journal::read(p.string());
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].timestamp, "t0");
  EXPECT_EQ(entries[1].timestamp, "t1");
  EXPECT_EQ(entries[0].response.content, "one\nline two");
  EXPECT_EQ(entries[0].response.usage.completion_tokens, 7);
  EXPECT_EQ(entries[1].response.finish_reason, FinishReason::Length);
  EXPECT_EQ(entries[1].request.messages[1].content, "q2");

  std::ifstream in(p);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 2);
  fs::remove(p);
}

TEST(Journal, UtcFormat) {
  const std::string t = Journal::utc_now();
  ASSERT_EQ(t.size(), 24u) << t;
  EXPECT_EQ(t[10], 'T');
  EXPECT_EQ(t[19], '.');
  EXPECT_EQ(t.back(), 'Z');
}

TEST(Journal, ConcurrentAppendsStayWhole) {
  const fs::path p = temp_file("concurrent.jsonl");
  Journal j(p.string(), [] { return std::string("t"); });
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 25; ++i) {
        ChatResponse r;
        r.content = std::string(200, static_cast<char>('a' + t));
        j.append(simple_request(std::to_string(t * 100 + i)), r);
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(Journal::read(p.string()).size(), 200u);
  fs::remove(p);
}

TEST(Replay, ServesRecordedResponses) {
  const fs::path p = temp_file("replay.jsonl");
  {
    MockProvider mock({"first", "second", "third"});
    Journal j(p.string());
    JournalingProvider rec(mock, j);
    EXPECT_EQ(rec.chat(simple_request("a")).content, "first");
    EXPECT_EQ(rec.chat(simple_request("b")).content, "second");
    EXPECT_EQ(rec.chat(simple_request("a")).content, "third");
  }
  auto replay = ReplayProvider::from_journal(p.string());
  EXPECT_EQ(replay.chat(simple_request("b")).content, "second");
  EXPECT_EQ(replay.chat(simple_request("a")).content, "first");
  EXPECT_EQ(replay.chat(simple_request("a")).content, "third");
  EXPECT_EQ(replay.chat(simple_request("a")).content, "third");
  EXPECT_EQ(kind_of([&] { replay.chat(simple_request("zzz")); }), LlmErrorKind::ReplayMiss);
  ChatRequest other_temp = simple_request("b");
  other_temp.temperature = 0.5;
  EXPECT_EQ(kind_of([&] { replay.chat(other_temp); }), LlmErrorKind::ReplayMiss);
  fs::remove(p);
}

TEST(Completion, Parse) {
  const auto r = parse_completion(
      R"({"choices":[{"message":{"role":"assistant","content":"hi"},"finish_reason":"length"}],)"
      R"("usage":{"prompt_tokens":3,"completion_tokens":4}})");
  EXPECT_EQ(r.content, "hi");
  EXPECT_EQ(r.finish_reason, FinishReason::Length);
  EXPECT_EQ(r.usage.prompt_tokens, 3);
  EXPECT_EQ(r.usage.completion_tokens, 4);
  for (const char* bad : {"not json", "[]", R"({"choices":[]})", R"({"choices":[{"message":{}}]})",
                          R"({"choices":[{"message":{"content":5}}]})"}) {
    EXPECT_EQ(kind_of([&] { parse_completion(bad); }), LlmErrorKind::MalformedProviderResponse) << bad;
  }
}

const char* kOkBody = R"({"choices":[{"message":{"role":"assistant","content":"pong"},"finish_reason":"stop"}]})";

// Serves a scripted sequence of status codes, then 200.
class ScriptedServer {
 public:
  explicit ScriptedServer(std::vector<int> statuses, std::string ok_body = kOkBody)
      : statuses_(std::move(statuses)), ok_body_(std::move(ok_body)) {
    server_.Post("/v1/chat", [this](const httplib::Request& req, httplib::Response& res) {
      const std::size_t n = hits_++;
      last_body_ = req.body;
      last_auth_ = req.get_header_value("Authorization");
      if (n < statuses_.size()) {
        res.status = statuses_[n];
        res.set_content("{}", "application/json");
      } else {
        res.set_content(ok_body_, "application/json");
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~ScriptedServer() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat"; }
  std::size_t hits() const { return hits_; }
  std::string last_body() const { return last_body_; }
  std::string last_auth() const { return last_auth_; }

 private:
  httplib::Server server_;
  std::vector<int> statuses_;
  std::string ok_body_;
  std::atomic<std::size_t> hits_{0};
  std::string last_body_;
  std::string last_auth_;
  int port_ = 0;
  std::thread thread_;
};

HttpConfig config_for(const ScriptedServer& s, int attempts = 5) {
  HttpConfig c;
  c.endpoint = s.endpoint();
  c.model = "test-model";
  c.api_key_env = "";
  c.max_attempts = attempts;
  c.initial_backoff = std::chrono::milliseconds(100);
  c.timeout = std::chrono::seconds(5);
  return c;
}

TEST(Http, SuccessFillsModel) {
  ScriptedServer s({});
  HttpProvider p(config_for(s));
  ChatRequest r = simple_request("ping");
  r.model.clear();
  EXPECT_EQ(p.chat(r).content, "pong");
  EXPECT_EQ(nlohmann::json::parse(s.last_body())["model"], "test-model");
  EXPECT_EQ(s.last_auth(), "");
}

TEST(Http, RetriesWithExponentialBackoff) {
  ScriptedServer s({429, 503, 500});
  std::vector<std::chrono::milliseconds> sleeps;
  HttpProvider p(config_for(s), [&](std::chrono::milliseconds d) { sleeps.push_back(d); });
  EXPECT_EQ(p.chat(simple_request("ping")).content, "pong");
  EXPECT_EQ(s.hits(), 4u);
  using std::chrono::milliseconds;
  EXPECT_EQ(sleeps, (std::vector<milliseconds>{milliseconds(100), milliseconds(200), milliseconds(400)}));
}

TEST(Http, GivesUpAfterMaxAttempts) {
  ScriptedServer s({429, 429, 429, 429});
  int sleeps = 0;
  HttpProvider p(config_for(s, 3), [&](std::chrono::milliseconds) { ++sleeps; });
  EXPECT_EQ(kind_of([&] { p.chat(simple_request("ping")); }), LlmErrorKind::RateLimited);
  EXPECT_EQ(s.hits(), 3u);
  EXPECT_EQ(sleeps, 2);
}

TEST(Http, AuthErrorIsNotRetried) {
  ScriptedServer s({401});
  int sleeps = 0;
  HttpProvider p(config_for(s), [&](std::chrono::milliseconds) { ++sleeps; });
  EXPECT_EQ(kind_of([&] { p.chat(simple_request("ping")); }), LlmErrorKind::AuthError);
  EXPECT_EQ(s.hits(), 1u);
  EXPECT_EQ(sleeps, 0);
}

TEST(Http, MissingKeyVariableIsAuthError) {
  ScriptedServer s({});
  HttpConfig c = config_for(s);
  c.api_key_env = "ATOMPRIOR_TEST_UNSET_KEY_VAR";
  ::unsetenv(c.api_key_env.c_str());
  HttpProvider p(c, [](std::chrono::milliseconds) {});
  EXPECT_EQ(kind_of([&] { p.chat(simple_request("ping")); }), LlmErrorKind::AuthError);
  EXPECT_EQ(s.hits(), 0u);
}

TEST(Http, SendsBearerToken) {
  ScriptedServer s({});
  HttpConfig c = config_for(s);
  c.api_key_env = "ATOMPRIOR_TEST_KEY_VAR";
  ::setenv(c.api_key_env.c_str(), "dummy-token", 1);
  HttpProvider p(c, [](std::chrono::milliseconds) {});
  p.chat(simple_request("ping"));
  EXPECT_EQ(s.last_auth(), "Bearer dummy-token");
  ::unsetenv(c.api_key_env.c_str());
}

TEST(Http, MalformedBody) {
  ScriptedServer s({}, R"({"choices":"nope"})");
  HttpProvider p(config_for(s), [](std::chrono::milliseconds) {});
  EXPECT_EQ(kind_of([&] { p.chat(simple_request("ping")); }), LlmErrorKind::MalformedProviderResponse);
}

TEST(Http, UnreachableEndpointRetriesThenFails) {
  int port = 0;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  HttpConfig c;
  c.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat";
  c.timeout = std::chrono::seconds(1);
  c.api_key_env = "";
  c.max_attempts = 2;
  int sleeps = 0;
  HttpProvider p(c, [&](std::chrono::milliseconds) { ++sleeps; });
  const auto k = kind_of([&] { p.chat(simple_request("ping")); });
  EXPECT_TRUE(k == LlmErrorKind::Transport || k == LlmErrorKind::Timeout) << to_string(k);
  EXPECT_EQ(sleeps, 1);
}

TEST(Http, RejectsNonHttpEndpoint) {
  HttpConfig c;
  c.endpoint = "ftp://example.org/x";
  EXPECT_THROW(HttpProvider{c}, std::invalid_argument);
}

}  // namespace
}  // namespace atomprior::llm
