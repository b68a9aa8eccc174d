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

#include "pipeline.h"

#include <future>

namespace gptlods {

std::shared_ptr<const KnowledgeBase> KnowledgeBase::Create(
    EquivalenceIndex index, Stoplist stoplist) {
  auto kb = std::make_shared<KnowledgeBase>(
      KnowledgeBase{std::move(index), LabelTable()});
  kb->labels = LabelTable::Extract(kb->index, std::move(stoplist));
  return kb;
}

Pipeline::Pipeline(std::shared_ptr<const KnowledgeBase> kb,
                   std::shared_ptr<const LlmProvider> provider,
                   std::vector<std::shared_ptr<const RecognizerClient>> recognizers,
                   ClockFn clock)
    : kb_(std::move(kb)),
      provider_(std::move(provider)),
      recognizers_(std::move(recognizers)),
      clock_(std::move(clock)) {
  if (kb_ == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "pipeline needs an index");
  }
}

AnnotationRun Pipeline::AnnotateText(std::string text,
                                     std::string provider_info,
                                     Timestamp timestamp) const {
  const EquivalenceIndex &index = kb_->index;

  std::vector<std::future<RecognizerOutput>> pending;
  for (const auto &client : recognizers_) {
    pending.push_back(std::async(std::launch::async, [&text, &index, client] {
      return RecognizeExternal(text, *client, index);
    }));
  }

  AnnotationRun run;
  std::vector<RecognizerOutput> outputs;
  outputs.push_back(RecognizeGazetteer(text, kb_->labels, index));
  size_t failed = 0;
  for (size_t i = 0; i < pending.size(); ++i) {
    try {
      outputs.push_back(pending[i].get());
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kRecognizerUnavailable &&
          e.code() != ErrorCode::kProtocol) {
        throw;
      }
      ++failed;
      run.warnings.push_back(std::string(ErrorCodeName(e.code())) + ": " +
                             e.what());
    }
  }
  if (outputs.empty()) {
    throw Error(ErrorCode::kRecognizerUnavailable,
                "all " + std::to_string(failed) + " recognizers failed");
  }
  for (const RecognizerOutput &output : outputs) {
    run.warnings.insert(run.warnings.end(), output.warnings.begin(),
                        output.warnings.end());
  }

  std::vector<EntitySpan> spans = EnsembleMerge(text, outputs, outputs.size());
  run.response = Annotate(std::move(text), std::move(spans), index,
                          std::move(provider_info), timestamp);
  return run;
}

AnnotationRun Pipeline::AnnotateText(std::string text) const {
  return AnnotateText(std::move(text), "none", clock_());
}

PipelineResult Pipeline::Run(const std::string &question) const {
  if (provider_ == nullptr) {
    throw Error(ErrorCode::kConfig, "no LLM provider configured");
  }
  LlmAnswer answer = provider_->Ask(question);
  AnnotationRun run = AnnotateText(std::move(answer.text),
                                   std::move(answer.provider_info),
                                   answer.produced_at);
  PipelineResult result;
  result.question = question;
  result.validation = ValidateResponse(run.response, kb_->index);
  result.answer = std::move(run.response);
  result.warnings = std::move(run.warnings);
  return result;
}

}  // namespace gptlods
