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

#include "json_codec.h"

#include "api_schema_data.h"

namespace gptlods {

namespace {

const char *KindName(TermKind kind) {
  switch (kind) {
    case TermKind::kIri: return "iri";
    case TermKind::kLiteral: return "literal";
    case TermKind::kBlank: return "blank";
  }
  return "iri";
}

json Strings(const std::vector<std::string> &values) {
  json out = json::array();
  for (const std::string &v : values) out.push_back(v);
  return out;
}

}  // namespace

json TermToJson(const Term &term) {
  json out = {{"kind", KindName(term.kind)}, {"value", term.value}};
  if (term.datatype) out["datatype"] = term.datatype->str();
  if (term.language) out["language"] = *term.language;
  return out;
}

json FactToJson(const EntityFact &fact, const EquivalenceIndex &index) {
  return {{"subject", TermToJson(fact.subject)},
          {"predicate", fact.predicate.str()},
          {"object", TermToJson(fact.object)},
          {"dataset", fact.dataset.value},
          {"dataset_name", index.registry().at(fact.dataset).name}};
}

json CardToJson(const EntityCard &card, const EquivalenceIndex &) {
  json uris = json::array();
  for (const Iri &iri : card.uris) uris.push_back(iri.str());
  json datasets = json::array();
  for (DatasetId d : card.dataset_ids) datasets.push_back(d.value);
  json out = {{"id", card.id.value},
              {"preferred_label", card.preferred_label},
              {"representative", card.uris.front().str()},
              {"uris", uris},
              {"uri_count", card.uri_count},
              {"dataset_ids", datasets},
              {"dataset_count", card.dataset_count},
              {"fact_count", card.fact_count}};
  if (card.image) out["image"] = *card.image;
  if (!card.types.empty()) {
    json types = json::array();
    for (const Iri &t : card.types) types.push_back(t.str());
    out["types"] = types;
  }
  return out;
}

json SpanToJson(const EntitySpan &span) {
  return {{"start", span.start},
          {"end", span.end},
          {"surface", span.surface},
          {"entity", span.entity.value},
          {"confidence", span.confidence},
          {"recognizers", Strings(span.recognizers)}};
}

json AnnotatedResponseToJson(const AnnotatedResponse &response,
                             const EquivalenceIndex &index) {
  json spans = json::array();
  for (const EntitySpan &span : response.spans) spans.push_back(SpanToJson(span));
  json cards = json::object();
  for (const auto &[id, card] : response.cards) {
    cards[std::to_string(id.value)] = CardToJson(card, index);
  }
  return {{"text", response.text},
          {"spans", spans},
          {"cards", cards},
          {"provider_info", response.provider_info},
          {"timestamp", FormatTimestamp(response.timestamp)},
          {"warnings", json::array()}};
}

json EvidenceToJson(const FactEvidence &evidence,
                    const EquivalenceIndex &index) {
  json datasets = json::array();
  for (DatasetId d : evidence.datasets) datasets.push_back(d.value);
  json samples = json::array();
  for (const EntityFact &fact : evidence.sample_triples) {
    samples.push_back(FactToJson(fact, index));
  }
  return {{"subject_entity", evidence.subject_entity.value},
          {"object_entity", evidence.object_entity.value},
          {"predicate", evidence.predicate.str()},
          {"datasets", datasets},
          {"sample_triples", samples}};
}

json ValidationToJson(const ValidationMap &validation,
                      const EquivalenceIndex &index) {
  json out = json::array();
  for (const auto &[pair, evidence] : validation) {
    json entries = json::array();
    for (const FactEvidence &e : evidence) {
      entries.push_back(EvidenceToJson(e, index));
    }
    out.push_back({{"entities", {pair.first.value, pair.second.value}},
                   {"evidence", entries}});
  }
  return out;
}

json AnnotationRunToJson(const AnnotationRun &run,
                         const EquivalenceIndex &index) {
  json out = AnnotatedResponseToJson(run.response, index);
  out["warnings"] = Strings(run.warnings);
  return out;
}

json PipelineResultToJson(const PipelineResult &result,
                          const EquivalenceIndex &index) {
  return {{"question", result.question},
          {"answer", AnnotatedResponseToJson(result.answer, index)},
          {"validation", ValidationToJson(result.validation, index)},
          {"warnings", Strings(result.warnings)}};
}

json EntityCardJson(const EquivalenceIndex &index, EntityId id) {
  return CardToJson(index.Card(id), index);
}

json EntityUrisJson(const EquivalenceIndex &index, EntityId id) {
  json uris = json::array();
  for (const Iri &iri : index.Uris(id)) uris.push_back(iri.str());
  return {{"id", id.value},
          {"representative", index.Representative(id).str()},
          {"uris", uris}};
}

json EntityFactsJson(const EquivalenceIndex &index, EntityId id, size_t page,
                     size_t size) {
  json facts = json::array();
  for (const EntityFact &fact : index.Facts(id, page, size)) {
    facts.push_back(FactToJson(fact, index));
  }
  return {{"id", id.value},
          {"representative", index.Representative(id).str()},
          {"page", page},
          {"size", size},
          {"total", index.FactCount(id)},
          {"facts", facts}};
}

json EntityDatasetsJson(const EquivalenceIndex &index, EntityId id) {
  json datasets = json::array();
  for (const DatasetMention &m : index.Datasets(id)) {
    datasets.push_back({{"id", m.dataset.value},
                        {"name", index.registry().at(m.dataset).name},
                        {"triple_count", m.triple_count}});
  }
  return {{"id", id.value},
          {"representative", index.Representative(id).str()},
          {"datasets", datasets}};
}

json DatasetsJson(const EquivalenceIndex &index) {
  json datasets = json::array();
  for (const DatasetInfo &d : index.registry().datasets()) {
    datasets.push_back({{"id", d.id.value},
                        {"name", d.name},
                        {"source_path", d.source_path},
                        {"triple_count", d.triple_count}});
  }
  return {{"datasets", datasets}};
}

json HealthJson(const EquivalenceIndex &index) {
  return {{"status", "ok"}, {"entities", index.entity_count()}};
}

json ParseErrorsJson(const std::vector<ParseError> &errors) {
  json out = json::array();
  for (const ParseError &e : errors) {
    out.push_back({{"line_number", e.line_number},
                   {"reason", e.reason},
                   {"raw_line", e.raw_line}});
  }
  return out;
}

json ErrorJson(ErrorCode code, const std::string &message) {
  return {{"error", {{"code", ErrorCodeName(code)}, {"message", message}}}};
}

const char *ApiSchema() { return kApiSchemaJson; }

}  // namespace gptlods
