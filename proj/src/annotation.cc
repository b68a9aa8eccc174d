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

#include "annotation.h"

#include <ctime>

#include "unicode.h"

namespace gptlods {

AnnotatedResponse Annotate(std::string text, std::vector<EntitySpan> spans,
                           const EquivalenceIndex &index,
                           std::string provider_info, Timestamp timestamp) {
  std::u32string chars = DecodeUtf8(text);
  size_t previous_end = 0;
  for (size_t i = 0; i < spans.size(); ++i) {
    const EntitySpan &span = spans[i];
    if (span.start >= span.end || span.end > chars.size()) {
      throw Error(ErrorCode::kInvalidArgument, "span outside text bounds");
    }
    if (i > 0 && span.start < previous_end) {
      throw Error(ErrorCode::kInvalidArgument,
                  "spans must be sorted and non-overlapping");
    }
    if (span.surface != Utf8Slice(chars, span.start, span.end)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "span surface does not match the text");
    }
    previous_end = span.end;
  }

  AnnotatedResponse out;
  for (const EntitySpan &span : spans) {
    if (out.cards.count(span.entity)) continue;
    if (span.entity.value >= index.entity_count()) {
      throw Error(ErrorCode::kInternal,
                  "span references unknown entity " +
                      std::to_string(span.entity.value));
    }
    out.cards.emplace(span.entity, index.Card(span.entity));
  }
  out.text = std::move(text);
  out.spans = std::move(spans);
  out.provider_info = std::move(provider_info);
  out.timestamp = timestamp;
  return out;
}

std::string HtmlEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string RenderHtml(const AnnotatedResponse &annotated) {
  std::u32string chars = DecodeUtf8(annotated.text);
  std::string html;
  size_t cursor = 0;
  for (const EntitySpan &span : annotated.spans) {
    html += HtmlEscape(Utf8Slice(chars, cursor, span.start));
    const EntityCard &card = annotated.cards.at(span.entity);
    html += "<a class=\"gptlods-entity\" href=\"";
    html += HtmlEscape(card.uris.front().str());
    html += "\" data-entity-id=\"" + std::to_string(card.id.value) + "\"";
    html += " data-uri-count=\"" + std::to_string(card.uri_count) + "\"";
    html += " data-dataset-count=\"" + std::to_string(card.dataset_count) + "\"";
    html += " data-fact-count=\"" + std::to_string(card.fact_count) + "\">";
    html += HtmlEscape(Utf8Slice(chars, span.start, span.end));
    html += "</a>";
    cursor = span.end;
  }
  html += HtmlEscape(Utf8Slice(chars, cursor, chars.size()));
  return html;
}

std::string FormatTimestamp(Timestamp t) {
  std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm utc{};
  gmtime_r(&secs, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace gptlods
