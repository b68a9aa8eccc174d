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

#include "recognition.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "http_util.h"
#include "json.hpp"
#include "unicode.h"

namespace gptlods {

using json = nlohmann::json;

RecognizerOutput RecognizeGazetteer(std::string_view text,
                                    const LabelTable &table,
                                    const EquivalenceIndex &index) {
  RecognizerOutput output;
  output.recognizer_name = std::string(kGazetteerName);
  std::vector<Token> tokens = Tokenize(text);

  size_t i = 0;
  while (i < tokens.size()) {
    size_t longest = std::min(table.max_tokens(), tokens.size() - i);
    bool matched = false;
    for (size_t len = longest; len >= 1 && !matched; --len) {
      std::vector<std::string> key;
      for (size_t k = i; k < i + len; ++k) key.push_back(tokens[k].text);
      if (len == 1 && table.stoplist().Contains(key[0])) continue;
      std::vector<EntityId> candidates = table.Lookup(key);
      if (candidates.empty()) continue;

      // Candidates arrive in ascending id order, so strict '>' keeps the
      // lowest id on ties.
      EntityId best = candidates.front();
      size_t best_facts = index.FactCount(best);
      for (EntityId c : candidates) {
        size_t facts = index.FactCount(c);
        if (facts > best_facts) best = c, best_facts = facts;
      }
      output.spans.push_back({tokens[i].start, tokens[i + len - 1].end, best});
      i += len;
      matched = true;
    }
    if (!matched) ++i;
  }
  return output;
}

HttpRecognizerClient::HttpRecognizerClient(std::string name, std::string url,
                                           std::chrono::milliseconds timeout)
    : name_(std::move(name)), url_(std::move(url)), timeout_(timeout) {
  ParseEndpoint(url_);
}

std::vector<RawAnnotation> ParseRecognizerReply(std::string_view body) {
  json reply;
  try {
    reply = json::parse(body);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kProtocol,
                std::string("recognizer reply is not JSON: ") + e.what());
  }
  if (!reply.is_object() || !reply.contains("annotations") ||
      !reply["annotations"].is_array()) {
    throw Error(ErrorCode::kProtocol,
                "recognizer reply lacks an \"annotations\" array");
  }
  std::vector<RawAnnotation> out;
  for (const json &a : reply["annotations"]) {
    if (!a.is_object() || !a.contains("start") || !a.contains("end") ||
        !a.contains("uri") || !a["start"].is_number_integer() ||
        !a["end"].is_number_integer() || !a["uri"].is_string()) {
      throw Error(ErrorCode::kProtocol, "malformed recognizer annotation");
    }
    out.push_back({a["start"].get<int64_t>(), a["end"].get<int64_t>(),
                   a["uri"].get<std::string>()});
  }
  return out;
}

std::vector<RawAnnotation> HttpRecognizerClient::Annotate(
    std::string_view text) const {
  json request = {{"text", std::string(text)}};
  HttpResponse response =
      PostJson(ParseEndpoint(url_), request.dump(), {}, timeout_,
               ErrorCode::kRecognizerUnavailable);
  if (response.status < 200 || response.status >= 300) {
    throw Error(ErrorCode::kRecognizerUnavailable,
                "recognizer " + name_ + " answered HTTP " +
                    std::to_string(response.status));
  }
  return ParseRecognizerReply(response.body);
}

RecognizerOutput RecognizeExternal(std::string_view text,
                                   const RecognizerClient &client,
                                   const EquivalenceIndex &index) {
  RecognizerOutput output;
  output.recognizer_name = client.name();
  const int64_t length = static_cast<int64_t>(DecodeUtf8(text).size());
  for (const RawAnnotation &a : client.Annotate(text)) {
    if (a.start < 0 || a.start >= a.end || a.end > length) {
      throw Error(ErrorCode::kProtocol,
                  "recognizer " + client.name() + " returned span [" +
                      std::to_string(a.start) + "," + std::to_string(a.end) +
                      ") outside the text");
    }
    std::optional<EntityId> entity = index.Resolve(a.uri);
    if (!entity) {
      output.warnings.push_back("recognizer " + client.name() +
                                ": unresolved IRI " + a.uri);
      continue;
    }
    output.spans.push_back({static_cast<size_t>(a.start),
                            static_cast<size_t>(a.end), *entity});
  }
  return output;
}

std::vector<EntitySpan> EnsembleMerge(
    std::string_view text, const std::vector<RecognizerOutput> &outputs,
    size_t total_recognizers) {
  if (total_recognizers == 0) {
    throw Error(ErrorCode::kInvalidArgument, "no recognizers were run");
  }
  std::u32string chars = DecodeUtf8(text);

  std::map<std::tuple<size_t, size_t, uint32_t>, std::set<std::string>> votes;
  for (const RecognizerOutput &output : outputs) {
    for (const CandidateSpan &span : output.spans) {
      if (span.start >= span.end || span.end > chars.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "span outside text bounds from " + output.recognizer_name);
      }
      votes[{span.start, span.end, span.entity.value}].insert(
          output.recognizer_name);
    }
  }

  struct Candidate {
    size_t start, end;
    uint32_t entity;
    const std::set<std::string> *names;
  };
  std::vector<Candidate> candidates;
  for (const auto &[key, names] : votes) {
    auto [start, end, entity] = key;
    candidates.push_back({start, end, entity, &names});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              if (a.names->size() != b.names->size()) {
                return a.names->size() > b.names->size();
              }
              if (a.end - a.start != b.end - b.start) {
                return a.end - a.start > b.end - b.start;
              }
              if (a.start != b.start) return a.start < b.start;
              return a.entity < b.entity;
            });

  // Accepted intervals keyed by start.
  std::map<size_t, size_t> taken;
  std::vector<EntitySpan> merged;
  for (const Candidate &c : candidates) {
    auto next = taken.lower_bound(c.start);
    if (next != taken.end() && next->first < c.end) continue;
    if (next != taken.begin() && std::prev(next)->second > c.start) continue;
    taken.emplace(c.start, c.end);

    EntitySpan span;
    span.start = c.start;
    span.end = c.end;
    span.surface = Utf8Slice(chars, c.start, c.end);
    span.entity = EntityId{c.entity};
    span.recognizers.assign(c.names->begin(), c.names->end());
    span.confidence = std::min(
        1.0, static_cast<double>(c.names->size()) / total_recognizers);
    merged.push_back(std::move(span));
  }
  std::sort(merged.begin(), merged.end(),
            [](const EntitySpan &a, const EntitySpan &b) {
              return a.start < b.start;
            });
  return merged;
}

}  // namespace gptlods
