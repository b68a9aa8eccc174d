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

#ifndef GPTLODS_EQUIVALENCE_INDEX_H_
#define GPTLODS_EQUIVALENCE_INDEX_H_

#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rdf.h"

namespace gptlods {

// Dense id of one owl:sameAs equivalence class.
struct EntityId {
  uint32_t value = 0;

  friend bool operator==(EntityId, EntityId) = default;
  friend auto operator<=>(EntityId, EntityId) = default;
};

// A non-sameAs triple mentioning an entity.
using EntityFact = Triple;

struct EntityCard {
  EntityId id;
  std::string preferred_label;
  std::vector<Iri> uris;  // sorted; uris.front() is the representative
  size_t uri_count = 0;
  std::vector<DatasetId> dataset_ids;
  size_t dataset_count = 0;
  size_t fact_count = 0;
  // Present only when the class carries foaf:depiction / rdf:type triples.
  std::optional<std::string> image;
  std::vector<Iri> types;

  friend bool operator==(const EntityCard &, const EntityCard &) = default;
};

struct DatasetMention {
  DatasetId dataset;
  uint64_t triple_count = 0;

  friend bool operator==(const DatasetMention &,
                         const DatasetMention &) = default;
};

// A label literal attached to a member of an entity class.
struct LabelRecord {
  EntityId entity;
  Iri predicate;
  std::string text;

  friend bool operator==(const LabelRecord &, const LabelRecord &) = default;
};

// Immutable owl:sameAs closure over a set of ingested triples, with the
// per-entity statistics served to clients. Safe for concurrent reads.
class EquivalenceIndex {
 public:
  static constexpr size_t kMaxPageSize = 1000;
  static constexpr std::string_view kSnapshotHeader = "GPTLODS-IDX v1";

  // Every IRI in subject or object position becomes a member of exactly one
  // class; classes are the connected components of the sameAs graph. Entity
  // ids follow the sorted order of class representatives.
  static EquivalenceIndex Build(std::vector<Triple> triples,
                                DatasetRegistry registry);

  size_t entity_count() const { return members_.size(); }
  size_t iri_count() const { return iris_.size(); }
  const DatasetRegistry &registry() const { return registry_; }

  // Distinct ingested triples in (dataset, subject, predicate, object) order.
  const std::vector<Triple> &triples() const { return triples_; }

  std::optional<EntityId> Resolve(std::string_view uri) const;
  std::optional<EntityId> Resolve(const Iri &iri) const;

  // Throws kNotFound for out-of-range ids.
  EntityCard Card(EntityId id) const;
  std::vector<Iri> Uris(EntityId id) const;
  const Iri &Representative(EntityId id) const;
  size_t FactCount(EntityId id) const;
  std::vector<EntityFact> Facts(EntityId id, size_t page,
                                size_t page_size) const;
  std::vector<EntityFact> AllFacts(EntityId id) const;
  std::vector<DatasetMention> Datasets(EntityId id) const;

  // Non-sameAs triples whose subject is in `id` and whose object is an IRI
  // (and therefore a member of some class). Indexes into triples().
  std::span<const uint32_t> OutgoingLinks(EntityId id) const;
  std::optional<EntityId> SubjectEntity(size_t triple_index) const;
  std::optional<EntityId> ObjectEntity(size_t triple_index) const;

  // Sorted by (entity, text, predicate).
  const std::vector<LabelRecord> &labels() const { return labels_; }

  void Save(std::ostream &out) const;
  void Save(const std::string &path) const;
  // Throws kVersion on a bad header, kCorrupt on malformed or truncated
  // sections, kIo when the file cannot be read.
  static EquivalenceIndex Load(std::istream &in);
  static EquivalenceIndex Load(const std::string &path);

 private:
  static constexpr uint32_t kNone = UINT32_MAX;

  EquivalenceIndex() = default;

  // Derives every per-entity table from iris_, iri_entity_ and triples_.
  void Finish();
  void CheckId(EntityId id) const;
  uint32_t IriId(const std::string &iri) const;

  DatasetRegistry registry_;
  std::vector<Iri> iris_;  // sorted
  std::unordered_map<std::string, uint32_t> iri_lookup_;
  std::vector<uint32_t> iri_entity_;
  std::vector<std::vector<uint32_t>> members_;  // sorted iri ids
  std::vector<Triple> triples_;
  std::vector<uint32_t> subject_entity_;
  std::vector<uint32_t> object_entity_;
  std::vector<std::vector<uint32_t>> mentions_;  // includes sameAs
  std::vector<std::vector<uint32_t>> facts_;
  std::vector<std::vector<uint32_t>> links_;
  std::vector<LabelRecord> labels_;
  std::vector<std::string> preferred_labels_;
};

}  // namespace gptlods

#endif  // GPTLODS_EQUIVALENCE_INDEX_H_
