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

#include "equivalence_index.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "union_find.h"

namespace gptlods {

namespace {

bool IsSameAs(const Triple &t) { return t.predicate.str() == vocab::kOwlSameAs; }

}  // namespace

EquivalenceIndex EquivalenceIndex::Build(std::vector<Triple> triples,
                                         DatasetRegistry registry) {
  EquivalenceIndex index;
  index.registry_ = std::move(registry);

  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  index.triples_ = std::move(triples);

  std::vector<std::string> names;
  for (const Triple &t : index.triples_) {
    if (t.subject.is_iri()) names.push_back(t.subject.value);
    if (t.object.is_iri()) names.push_back(t.object.value);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  index.iris_.reserve(names.size());
  for (const std::string &name : names) {
    index.iris_.push_back(NormalizeIri(name));
    index.iri_lookup_.emplace(name, index.iris_.size() - 1);
  }

  UnionFind sets(names.size());
  for (const Triple &t : index.triples_) {
    if (IsSameAs(t) && t.subject.is_iri() && t.object.is_iri()) {
      sets.Union(index.IriId(t.subject.value), index.IriId(t.object.value));
    }
  }

  // Walking IRIs in sorted order visits each class first through its smallest
  // member, so ids come out in representative order.
  std::vector<uint32_t> root_entity(names.size(), kNone);
  index.iri_entity_.resize(names.size());
  uint32_t next = 0;
  for (uint32_t i = 0; i < names.size(); ++i) {
    uint32_t root = sets.Find(i);
    if (root_entity[root] == kNone) root_entity[root] = next++;
    index.iri_entity_[i] = root_entity[root];
  }

  index.Finish();
  return index;
}

void EquivalenceIndex::Finish() {
  if (iri_lookup_.size() != iris_.size()) {
    iri_lookup_.clear();
    for (uint32_t i = 0; i < iris_.size(); ++i) {
      iri_lookup_.emplace(iris_[i].str(), i);
    }
  }

  uint32_t entities = 0;
  for (uint32_t e : iri_entity_) entities = std::max(entities, e + 1);
  members_.assign(entities, {});
  for (uint32_t i = 0; i < iri_entity_.size(); ++i) {
    members_[iri_entity_[i]].push_back(i);
  }

  const size_t n = triples_.size();
  subject_entity_.assign(n, kNone);
  object_entity_.assign(n, kNone);
  mentions_.assign(entities, {});
  facts_.assign(entities, {});
  links_.assign(entities, {});
  labels_.clear();

  for (uint32_t i = 0; i < n; ++i) {
    const Triple &t = triples_[i];
    if (t.subject.is_iri()) subject_entity_[i] = iri_entity_[IriId(t.subject.value)];
    if (t.object.is_iri()) object_entity_[i] = iri_entity_[IriId(t.object.value)];
    uint32_t s = subject_entity_[i];
    uint32_t o = object_entity_[i];
    bool same_as = IsSameAs(t);
    // A triple linking two members of the same class counts once.
    for (uint32_t e : {s, o == s ? kNone : o}) {
      if (e == kNone) continue;
      mentions_[e].push_back(i);
      if (!same_as) facts_[e].push_back(i);
    }
    if (!same_as && s != kNone && o != kNone) links_[s].push_back(i);
    if (s != kNone && t.object.is_literal() &&
        vocab::IsLabelPredicate(t.predicate.str())) {
      labels_.push_back({EntityId{s}, t.predicate, t.object.value});
    }
  }

  std::sort(labels_.begin(), labels_.end(),
            [](const LabelRecord &a, const LabelRecord &b) {
              return std::tie(a.entity, a.text, a.predicate) <
                     std::tie(b.entity, b.text, b.predicate);
            });
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());

  preferred_labels_.assign(entities, {});
  std::vector<bool> has_label(entities, false);
  for (const LabelRecord &label : labels_) {
    if (!has_label[label.entity.value]) {
      has_label[label.entity.value] = true;
      preferred_labels_[label.entity.value] = label.text;
    }
  }
  for (uint32_t e = 0; e < entities; ++e) {
    if (!has_label[e]) preferred_labels_[e] = iris_[members_[e].front()].str();
  }
}

uint32_t EquivalenceIndex::IriId(const std::string &iri) const {
  auto it = iri_lookup_.find(iri);
  if (it == iri_lookup_.end()) {
    throw Error(ErrorCode::kInternal, "IRI missing from index: " + iri);
  }
  return it->second;
}

void EquivalenceIndex::CheckId(EntityId id) const {
  if (id.value >= members_.size()) {
    throw Error(ErrorCode::kNotFound,
                "unknown entity id " + std::to_string(id.value));
  }
}

std::optional<EntityId> EquivalenceIndex::Resolve(std::string_view uri) const {
  try {
    return Resolve(NormalizeIri(uri));
  } catch (const Error &) {
    return std::nullopt;
  }
}

std::optional<EntityId> EquivalenceIndex::Resolve(const Iri &iri) const {
  auto it = iri_lookup_.find(iri.str());
  if (it == iri_lookup_.end()) return std::nullopt;
  return EntityId{iri_entity_[it->second]};
}

const Iri &EquivalenceIndex::Representative(EntityId id) const {
  CheckId(id);
  return iris_[members_[id.value].front()];
}

std::vector<Iri> EquivalenceIndex::Uris(EntityId id) const {
  CheckId(id);
  std::vector<Iri> uris;
  for (uint32_t i : members_[id.value]) uris.push_back(iris_[i]);
  return uris;
}

size_t EquivalenceIndex::FactCount(EntityId id) const {
  CheckId(id);
  return facts_[id.value].size();
}

EntityCard EquivalenceIndex::Card(EntityId id) const {
  CheckId(id);
  EntityCard card;
  card.id = id;
  card.preferred_label = preferred_labels_[id.value];
  card.uris = Uris(id);
  card.uri_count = card.uris.size();
  for (const DatasetMention &m : Datasets(id)) {
    card.dataset_ids.push_back(m.dataset);
  }
  card.dataset_count = card.dataset_ids.size();
  card.fact_count = facts_[id.value].size();

  for (uint32_t i : facts_[id.value]) {
    const Triple &t = triples_[i];
    if (subject_entity_[i] != id.value) continue;
    const std::string &p = t.predicate.str();
    if (p == vocab::kFoafDepiction && !t.object.is_blank()) {
      if (!card.image || t.object.value < *card.image) {
        card.image = t.object.value;
      }
    } else if (p == vocab::kRdfType && t.object.is_iri()) {
      card.types.push_back(NormalizeIri(t.object.value));
    }
  }
  std::sort(card.types.begin(), card.types.end());
  card.types.erase(std::unique(card.types.begin(), card.types.end()),
                   card.types.end());
  return card;
}

std::vector<EntityFact> EquivalenceIndex::Facts(EntityId id, size_t page,
                                                size_t page_size) const {
  CheckId(id);
  if (page_size == 0 || page_size > kMaxPageSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "page size must be in [1, " + std::to_string(kMaxPageSize) +
                    "]");
  }
  const std::vector<uint32_t> &facts = facts_[id.value];
  std::vector<EntityFact> out;
  if (page > facts.size() / page_size) return out;
  size_t begin = page * page_size;
  size_t end = std::min(facts.size(), begin + page_size);
  for (size_t i = begin; i < end; ++i) out.push_back(triples_[facts[i]]);
  return out;
}

std::vector<EntityFact> EquivalenceIndex::AllFacts(EntityId id) const {
  CheckId(id);
  std::vector<EntityFact> out;
  for (uint32_t i : facts_[id.value]) out.push_back(triples_[i]);
  return out;
}

std::vector<DatasetMention> EquivalenceIndex::Datasets(EntityId id) const {
  CheckId(id);
  std::map<uint32_t, uint64_t> counts;
  for (uint32_t i : mentions_[id.value]) ++counts[triples_[i].dataset.value];
  std::vector<DatasetMention> out;
  for (const auto &[dataset, count] : counts) {
    out.push_back({DatasetId{dataset}, count});
  }
  return out;
}

std::span<const uint32_t> EquivalenceIndex::OutgoingLinks(EntityId id) const {
  CheckId(id);
  return links_[id.value];
}

std::optional<EntityId> EquivalenceIndex::SubjectEntity(
    size_t triple_index) const {
  uint32_t e = subject_entity_.at(triple_index);
  if (e == kNone) return std::nullopt;
  return EntityId{e};
}

std::optional<EntityId> EquivalenceIndex::ObjectEntity(
    size_t triple_index) const {
  uint32_t e = object_entity_.at(triple_index);
  if (e == kNone) return std::nullopt;
  return EntityId{e};
}

}  // namespace gptlods
