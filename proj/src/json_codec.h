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

// JSON documents served by the HTTP API and printed by the CLI. The shapes
// are published in schema/api.schema.json.

#ifndef GPTLODS_JSON_CODEC_H_
#define GPTLODS_JSON_CODEC_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "pipeline.h"

namespace gptlods {

using json = nlohmann::json;

json TermToJson(const Term &term);
json FactToJson(const EntityFact &fact, const EquivalenceIndex &index);
json CardToJson(const EntityCard &card, const EquivalenceIndex &index);
json SpanToJson(const EntitySpan &span);
json AnnotatedResponseToJson(const AnnotatedResponse &response,
                             const EquivalenceIndex &index);
json EvidenceToJson(const FactEvidence &evidence,
                    const EquivalenceIndex &index);
json ValidationToJson(const ValidationMap &validation,
                      const EquivalenceIndex &index);
json AnnotationRunToJson(const AnnotationRun &run,
                         const EquivalenceIndex &index);
json PipelineResultToJson(const PipelineResult &result,
                          const EquivalenceIndex &index);

json EntityCardJson(const EquivalenceIndex &index, EntityId id);
json EntityUrisJson(const EquivalenceIndex &index, EntityId id);
json EntityFactsJson(const EquivalenceIndex &index, EntityId id, size_t page,
                     size_t size);
json EntityDatasetsJson(const EquivalenceIndex &index, EntityId id);
json DatasetsJson(const EquivalenceIndex &index);
json HealthJson(const EquivalenceIndex &index);
json ParseErrorsJson(const std::vector<ParseError> &errors);

json ErrorJson(ErrorCode code, const std::string &message);

// The published JSON Schema for every API document.
const char *ApiSchema();

}  // namespace gptlods

#endif  // GPTLODS_JSON_CODEC_H_
