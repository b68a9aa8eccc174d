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

#ifndef GPTLODS_PIPELINE_H_
#define GPTLODS_PIPELINE_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "annotation.h"
#include "equivalence_index.h"
#include "fact_validation.h"
#include "label_index.h"
#include "llm_gateway.h"
#include "recognition.h"

namespace gptlods {

// The immutable index together with its label table.
struct KnowledgeBase {
  EquivalenceIndex index;
  LabelTable labels;

  static std::shared_ptr<const KnowledgeBase> Create(EquivalenceIndex index,
                                                     Stoplist stoplist);
};

struct AnnotationRun {
  AnnotatedResponse response;
  std::vector<std::string> warnings;
};

struct PipelineResult {
  std::string question;
  AnnotatedResponse answer;
  ValidationMap validation;
  std::vector<std::string> warnings;
};

// ask -> recognize -> merge -> annotate -> validate. Stateless; Run() may be
// called from many threads at once.
class Pipeline {
 public:
  using ClockFn = std::function<Timestamp()>;

  Pipeline(std::shared_ptr<const KnowledgeBase> kb,
           std::shared_ptr<const LlmProvider> provider,
           std::vector<std::shared_ptr<const RecognizerClient>> recognizers = {},
           ClockFn clock = [] { return std::chrono::system_clock::now(); });

  const KnowledgeBase &kb() const { return *kb_; }
  bool has_provider() const { return provider_ != nullptr; }
  size_t recognizer_count() const { return recognizers_.size() + 1; }

  // Runs every recognizer and merges. External recognizer failures become
  // warnings; kRecognizerUnavailable only if none succeeded.
  AnnotationRun AnnotateText(std::string text, std::string provider_info,
                             Timestamp timestamp) const;
  // Timestamped with the pipeline clock.
  AnnotationRun AnnotateText(std::string text) const;

  // Throws the provider's error without attempting annotation.
  PipelineResult Run(const std::string &question) const;

 private:
  std::shared_ptr<const KnowledgeBase> kb_;
  std::shared_ptr<const LlmProvider> provider_;
  std::vector<std::shared_ptr<const RecognizerClient>> recognizers_;
  ClockFn clock_;
};

}  // namespace gptlods

#endif  // GPTLODS_PIPELINE_H_
