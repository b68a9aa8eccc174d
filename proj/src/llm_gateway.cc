// Copyright 2026 The gptlods Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "llm_gateway.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "http_util.h"
#include "json.hpp"

namespace gptlods {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

std::optional<std::string> GetEnv(const std::string &name) {
  const char *value = std::getenv(name.c_str());
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

void CheckQuestion(const std::string &question) {
  if (question.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "question is empty");
  }
}

}  // namespace

ProviderConfig ProviderConfig::Canned(std::string fixture_path) {
  ProviderConfig config;
  config.kind = ProviderKind::kCanned;
  config.fixture_path = std::move(fixture_path);
  return config;
}

ProviderConfig ProviderConfig::HttpChatFromEnvironment() {
  ProviderConfig config;
  config.kind = ProviderKind::kHttpChat;
  config.endpoint = GetEnv(kApiUrlEnv);
  config.model = GetEnv(kModelEnv);
  return config;
}

void ProviderConfig::Validate() const {
  if (kind == ProviderKind::kCanned) {
    if (!fixture_path) {
      throw Error(ErrorCode::kConfig, "canned provider needs a fixture path");
    }
    return;
  }
  if (!endpoint) {
    throw Error(ErrorCode::kConfig, std::string("http_chat provider needs an "
                                                "endpoint (set ") +
                                        kApiUrlEnv + ")");
  }
  if (!model) {
    throw Error(ErrorCode::kConfig, std::string("http_chat provider needs a "
                                                "model (set ") +
                                        kModelEnv + ")");
  }
  if (timeout.count() <= 0) {
    throw Error(ErrorCode::kConfig, "provider timeout must be positive");
  }
  ParseEndpoint(*endpoint);
}

CannedProvider::CannedProvider(const std::string &fixture_path) {
  std::ifstream in(fixture_path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfig, "cannot open canned fixture " +
                                        fixture_path);
  }
  json fixture;
  try {
    fixture = json::parse(in);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kConfig,
                "canned fixture is not JSON: " + std::string(e.what()));
  }
  if (!fixture.is_object()) {
    throw Error(ErrorCode::kConfig, "canned fixture must be a JSON object");
  }
  for (auto it = fixture.begin(); it != fixture.end(); ++it) {
    if (!it.value().is_string()) {
      throw Error(ErrorCode::kConfig,
                  "canned answer for '" + it.key() + "' is not a string");
    }
    answers_.emplace(it.key(), it.value().get<std::string>());
  }
  info_ = "canned:" +
          std::filesystem::path(fixture_path).filename().string();
}

LlmAnswer CannedProvider::Ask(const std::string &question) const {
  CheckQuestion(question);
  auto start = Clock::now();
  auto it = answers_.find(question);
  if (it == answers_.end() || it->second.empty()) {
    throw Error(ErrorCode::kProvider,
                "no canned answer for question: " + question);
  }
  LlmAnswer answer;
  answer.text = it->second;
  answer.provider_info = info_;
  answer.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  answer.produced_at = Timestamp{};
  return answer;
}

HttpChatProvider::HttpChatProvider(ProviderConfig config)
    : config_(std::move(config)) {
  config_.Validate();
}

LlmAnswer HttpChatProvider::Ask(const std::string &question) const {
  CheckQuestion(question);
  std::optional<std::string> key = GetEnv(config_.api_key_env);
  if (!key) {
    throw Error(ErrorCode::kConfig, "environment variable " +
                                        config_.api_key_env +
                                        " holding the API key is not set");
  }
  json request = {
      {"model", *config_.model},
      {"messages", json::array({{{"role", "user"}, {"content", question}}})}};

  auto start = Clock::now();
  HttpResponse response = PostJson(
      ParseEndpoint(*config_.endpoint), request.dump(),
      {{"Authorization", "Bearer " + *key}}, config_.timeout,
      ErrorCode::kProvider);
  if (response.status < 200 || response.status >= 300) {
    throw Error(ErrorCode::kProvider, "chat endpoint answered HTTP " +
                                          std::to_string(response.status));
  }

  LlmAnswer answer;
  try {
    json reply = json::parse(response.body);
    answer.text =
        reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kProvider,
                "malformed chat completion reply: " + std::string(e.what()));
  }
  if (answer.text.empty()) {
    throw Error(ErrorCode::kProvider, "chat completion returned empty text");
  }
  answer.provider_info = "http_chat:" + *config_.model;
  answer.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  answer.produced_at = std::chrono::system_clock::now();
  return answer;
}

std::unique_ptr<LlmProvider> MakeProvider(const ProviderConfig &config) {
  config.Validate();
  if (config.kind == ProviderKind::kCanned) {
    return std::make_unique<CannedProvider>(*config.fixture_path);
  }
  return std::make_unique<HttpChatProvider>(config);
}

LlmAnswer Ask(const std::string &question, const ProviderConfig &config) {
  return MakeProvider(config)->Ask(question);
}

}  // namespace gptlods
