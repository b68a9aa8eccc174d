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

#ifndef GPTLODS_FACT_VALIDATION_H_
#define GPTLODS_FACT_VALIDATION_H_

#include <map>
#include <utility>
#include <vector>

#include "annotation.h"
#include "equivalence_index.h"

namespace gptlods {

// All triples asserting `predicate` from a member of one class to a member of
// the other, with the datasets that contain them.
struct FactEvidence {
  EntityId subject_entity;
  EntityId object_entity;
  Iri predicate;
  std::vector<DatasetId> datasets;       // sorted, unique, non-empty
  std::vector<EntityFact> sample_triples;  // sorted

  friend bool operator==(const FactEvidence &, const FactEvidence &) = default;
};

// Unordered entity pair, stored with first < second.
using EntityPair = std::pair<EntityId, EntityId>;
using ValidationMap = std::map<EntityPair, std::vector<FactEvidence>>;

inline constexpr size_t kMaxValidatedEntities = 20;

// One entry per (direction, predicate); a->b entries come first, each
// direction ordered by predicate. Throws kNotFound for unknown ids and
// kInvalidPair when a == b.
std::vector<FactEvidence> RelationsBetween(EntityId a, EntityId b,
                                           const EquivalenceIndex &index);

// Every unordered pair of distinct entities, including pairs without
// evidence. Only the first kMaxValidatedEntities distinct ids are used.
ValidationMap ValidateEntities(const std::vector<EntityId> &entities,
                               const EquivalenceIndex &index);

// Pairs among the span entities, ranked by span confidence when the
// response mentions more than kMaxValidatedEntities entities.
// Throws kInvalidPair unless `entities` holds two or more distinct ids.
void RequireDistinctPair(const std::vector<EntityId> &entities);

ValidationMap ValidateResponse(const AnnotatedResponse &annotated,
                               const EquivalenceIndex &index);

}  // namespace gptlods

#endif  // GPTLODS_FACT_VALIDATION_H_
