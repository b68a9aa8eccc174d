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

#ifndef GPTLODS_ANNOTATION_H_
#define GPTLODS_ANNOTATION_H_

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "equivalence_index.h"
#include "recognition.h"

namespace gptlods {

using Timestamp = std::chrono::system_clock::time_point;

struct AnnotatedResponse {
  std::string text;
  std::vector<EntitySpan> spans;  // sorted, non-overlapping
  std::map<EntityId, EntityCard> cards;
  std::string provider_info;
  Timestamp timestamp;
};

// Attaches one card per distinct span entity. Throws kInvalidArgument when
// spans do not fit the text and kInternal when a span names an entity the
// index does not know.
AnnotatedResponse Annotate(std::string text, std::vector<EntitySpan> spans,
                           const EquivalenceIndex &index,
                           std::string provider_info, Timestamp timestamp);

// HTML fragment: escaped text with each span wrapped in an anchor that
// carries the card statistics as data attributes.
std::string RenderHtml(const AnnotatedResponse &annotated);

std::string HtmlEscape(std::string_view text);

// "YYYY-MM-DDTHH:MM:SSZ".
std::string FormatTimestamp(Timestamp t);

}  // namespace gptlods

#endif  // GPTLODS_ANNOTATION_H_
