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

#include "fact_validation.h"

#include <algorithm>

namespace gptlods {

namespace {

// Evidence for one direction, ordered by predicate.
void CollectDirection(EntityId from, EntityId to,
                      const EquivalenceIndex &index,
                      std::vector<FactEvidence> *out) {
  std::map<Iri, FactEvidence> by_predicate;
  for (uint32_t i : index.OutgoingLinks(from)) {
    if (index.ObjectEntity(i) != to) continue;
    const Triple &t = index.triples()[i];
    FactEvidence &evidence = by_predicate[t.predicate];
    evidence.subject_entity = from;
    evidence.object_entity = to;
    evidence.predicate = t.predicate;
    evidence.datasets.push_back(t.dataset);
    evidence.sample_triples.push_back(t);
  }
  for (auto &[predicate, evidence] : by_predicate) {
    auto &ds = evidence.datasets;
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::sort(evidence.sample_triples.begin(), evidence.sample_triples.end());
    out->push_back(std::move(evidence));
  }
}

}  // namespace

std::vector<FactEvidence> RelationsBetween(EntityId a, EntityId b,
                                           const EquivalenceIndex &index) {
  for (EntityId id : {a, b}) {
    if (id.value >= index.entity_count()) {
      throw Error(ErrorCode::kNotFound,
                  "unknown entity id " + std::to_string(id.value));
    }
  }
  if (a == b) {
    throw Error(ErrorCode::kInvalidPair,
                "fact validation needs two distinct entities");
  }
  std::vector<FactEvidence> out;
  CollectDirection(a, b, index, &out);
  CollectDirection(b, a, index, &out);
  return out;
}

ValidationMap ValidateEntities(const std::vector<EntityId> &entities,
                               const EquivalenceIndex &index) {
  std::vector<EntityId> chosen;
  for (EntityId id : entities) {
    if (chosen.size() == kMaxValidatedEntities) break;
    if (std::find(chosen.begin(), chosen.end(), id) == chosen.end()) {
      chosen.push_back(id);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  ValidationMap result;
  for (size_t i = 0; i < chosen.size(); ++i) {
    for (size_t j = i + 1; j < chosen.size(); ++j) {
      result[{chosen[i], chosen[j]}] =
          RelationsBetween(chosen[i], chosen[j], index);
    }
  }
  return result;
}

void RequireDistinctPair(const std::vector<EntityId> &entities) {
  for (EntityId id : entities) {
    if (id != entities.front()) return;
  }
  throw Error(ErrorCode::kInvalidPair,
              "fact checking needs at least two distinct entities");
}

ValidationMap ValidateResponse(const AnnotatedResponse &annotated,
                               const EquivalenceIndex &index) {
  std::vector<const EntitySpan *> ranked;
  for (const EntitySpan &span : annotated.spans) ranked.push_back(&span);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const EntitySpan *a, const EntitySpan *b) {
                     return a->confidence > b->confidence;
                   });
  std::vector<EntityId> entities;
  for (const EntitySpan *span : ranked) entities.push_back(span->entity);
  return ValidateEntities(entities, index);
}

}  // namespace gptlods
