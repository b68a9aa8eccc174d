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

// Entity recognition: the built-in gazetteer, clients for external
// recognizers, and the ensemble merge that reduces their outputs to one
// non-overlapping span set. All offsets are Unicode code points.

#ifndef GPTLODS_RECOGNITION_H_
#define GPTLODS_RECOGNITION_H_

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "equivalence_index.h"
#include "label_index.h"

namespace gptlods {

inline constexpr std::string_view kGazetteerName = "gazetteer";

struct CandidateSpan {
  size_t start = 0;
  size_t end = 0;
  EntityId entity;

  friend bool operator==(const CandidateSpan &,
                         const CandidateSpan &) = default;
};

struct RecognizerOutput {
  std::string recognizer_name;
  std::vector<CandidateSpan> spans;
  std::vector<std::string> warnings;
};

struct EntitySpan {
  size_t start = 0;
  size_t end = 0;
  std::string surface;
  EntityId entity;
  double confidence = 0.0;
  std::vector<std::string> recognizers;  // sorted, unique

  friend bool operator==(const EntitySpan &, const EntitySpan &) = default;
};

// Greedy longest match over word tokens. When a token sequence names several
// entities, the one with the most facts wins, then the lowest id.
RecognizerOutput RecognizeGazetteer(std::string_view text,
                                    const LabelTable &table,
                                    const EquivalenceIndex &index);

// One annotation as returned by an external recognizer.
struct RawAnnotation {
  int64_t start = 0;
  int64_t end = 0;
  std::string uri;
};

class RecognizerClient {
 public:
  virtual ~RecognizerClient() = default;
  virtual const std::string &name() const = 0;
  // Throws kRecognizerUnavailable on transport failure, kProtocol on a
  // malformed reply.
  virtual std::vector<RawAnnotation> Annotate(std::string_view text) const = 0;
};

// Speaks the recognizer wire protocol:
//   POST {"text": "..."} -> {"annotations": [{"start", "end", "uri"}]}
class HttpRecognizerClient : public RecognizerClient {
 public:
  HttpRecognizerClient(std::string name, std::string url,
                       std::chrono::milliseconds timeout =
                           std::chrono::milliseconds(10000));

  const std::string &name() const override { return name_; }
  std::vector<RawAnnotation> Annotate(std::string_view text) const override;

 private:
  std::string name_;
  std::string url_;
  std::chrono::milliseconds timeout_;
};

// Decodes a recognizer reply body. Throws kProtocol.
std::vector<RawAnnotation> ParseRecognizerReply(std::string_view body);

// Maps each annotation through the index. Unresolvable IRIs are dropped with
// a warning; spans outside the text raise kProtocol.
RecognizerOutput RecognizeExternal(std::string_view text,
                                   const RecognizerClient &client,
                                   const EquivalenceIndex &index);

// Merges identical (start, end, entity) spans across recognizers, then keeps
// a non-overlapping subset preferring more endorsements, then longer spans,
// then earlier starts. The result is sorted by start. Confidence is the
// endorsing share of `total_recognizers`.
std::vector<EntitySpan> EnsembleMerge(std::string_view text,
                                      const std::vector<RecognizerOutput> &outputs,
                                      size_t total_recognizers);

}  // namespace gptlods

#endif  // GPTLODS_RECOGNITION_H_
