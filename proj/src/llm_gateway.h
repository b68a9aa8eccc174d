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

#ifndef GPTLODS_LLM_GATEWAY_H_
#define GPTLODS_LLM_GATEWAY_H_

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "annotation.h"

namespace gptlods {

inline constexpr const char *kApiKeyEnv = "CHAT_API_KEY";
inline constexpr const char *kApiUrlEnv = "CHAT_API_URL";
inline constexpr const char *kModelEnv = "CHAT_MODEL";

enum class ProviderKind { kHttpChat, kCanned };

struct ProviderConfig {
  ProviderKind kind = ProviderKind::kCanned;
  std::optional<std::string> endpoint;
  std::optional<std::string> model;
  std::string api_key_env = kApiKeyEnv;
  std::chrono::milliseconds timeout{30000};
  std::optional<std::string> fixture_path;

  static ProviderConfig Canned(std::string fixture_path);
  // Endpoint and model from CHAT_API_URL / CHAT_MODEL.
  static ProviderConfig HttpChatFromEnvironment();

  // Throws kConfig when required fields are missing.
  void Validate() const;
};

struct LlmAnswer {
  std::string text;
  std::string provider_info;
  std::chrono::milliseconds latency{0};
  // When the text was produced. Replayed answers use the Unix epoch.
  Timestamp produced_at;
};

class LlmProvider {
 public:
  virtual ~LlmProvider() = default;
  // Throws kProvider (and kConfig for http_chat without a key).
  virtual LlmAnswer Ask(const std::string &question) const = 0;
};

// Answers from a JSON object mapping question to answer; no network access.
class CannedProvider : public LlmProvider {
 public:
  // Throws kConfig when the fixture cannot be read or is not a string map.
  explicit CannedProvider(const std::string &fixture_path);

  LlmAnswer Ask(const std::string &question) const override;

 private:
  std::string info_;
  std::unordered_map<std::string, std::string> answers_;
};

// One chat-completion request per question: the question is the sole user
// message and the first choice's content is the answer.
class HttpChatProvider : public LlmProvider {
 public:
  explicit HttpChatProvider(ProviderConfig config);

  LlmAnswer Ask(const std::string &question) const override;

 private:
  ProviderConfig config_;
};

std::unique_ptr<LlmProvider> MakeProvider(const ProviderConfig &config);

// Convenience for one-off questions.
LlmAnswer Ask(const std::string &question, const ProviderConfig &config);

}  // namespace gptlods

#endif  // GPTLODS_LLM_GATEWAY_H_
