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

// Snapshot format: a version header followed by tab-separated sections, each
// introduced by "<NAME>\t<row count>", then an END trailer.
//
//   GPTLODS-IDX v1
//   DATASETS  id, name, source path, parsed triple count
//   IRIS      iri id, IRI (sorted)
//   UNIONS    iri id, entity id
//   LABELS    entity id, label predicate, label text
//   TRIPLES   dataset id, subject, predicate, object (N-Triples terms)
//   END
//
// Free-text fields escape backslash, tab, CR and LF with a backslash.

#include <charconv>
#include <fstream>
#include <sstream>

#include "equivalence_index.h"
#include "union_find.h"

namespace gptlods {

namespace {

std::string EscapeField(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

[[noreturn]] void Corrupt(const std::string &section, const std::string &why) {
  throw Error(ErrorCode::kCorrupt, "snapshot section " + section + ": " + why);
}

std::string UnescapeField(std::string_view s, const std::string &section) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(s[i]);
      continue;
    }
    if (++i == s.size()) Corrupt(section, "dangling escape");
    switch (s[i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: Corrupt(section, "bad escape");
    }
  }
  return out;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  for (;;) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

uint64_t ParseNumber(std::string_view s, const std::string &section) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    Corrupt(section, "bad number '" + std::string(s) + "'");
  }
  return value;
}

class SectionReader {
 public:
  explicit SectionReader(std::istream &in) : in_(in) {}

  // Reads "<name>\t<count>" and returns the count.
  uint64_t Begin(const std::string &name) {
    std::string line;
    if (!std::getline(in_, line)) Corrupt(name, "missing (truncated file)");
    auto fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0] != name) {
      Corrupt(name, "expected section header");
    }
    return ParseNumber(fields[1], name);
  }

  std::vector<std::string_view> Row(const std::string &name, size_t arity) {
    if (!std::getline(in_, line_)) Corrupt(name, "truncated");
    auto fields = SplitTabs(line_);
    if (fields.size() != arity) Corrupt(name, "wrong field count");
    return fields;
  }

  void End() {
    std::string line;
    if (!std::getline(in_, line) || line != "END") {
      Corrupt("END", "missing trailer (truncated file)");
    }
  }

 private:
  std::istream &in_;
  std::string line_;
};

}  // namespace

void EquivalenceIndex::Save(std::ostream &out) const {
  out << kSnapshotHeader << '\n';
  out << "DATASETS\t" << registry_.size() << '\n';
  for (const DatasetInfo &d : registry_.datasets()) {
    out << d.id.value << '\t' << EscapeField(d.name) << '\t'
        << EscapeField(d.source_path) << '\t' << d.triple_count << '\n';
  }
  out << "IRIS\t" << iris_.size() << '\n';
  for (size_t i = 0; i < iris_.size(); ++i) {
    out << i << '\t' << EscapeField(iris_[i].str()) << '\n';
  }
  out << "UNIONS\t" << iri_entity_.size() << '\n';
  for (size_t i = 0; i < iri_entity_.size(); ++i) {
    out << i << '\t' << iri_entity_[i] << '\n';
  }
  out << "LABELS\t" << labels_.size() << '\n';
  for (const LabelRecord &l : labels_) {
    out << l.entity.value << '\t' << EscapeField(l.predicate.str()) << '\t'
        << EscapeField(l.text) << '\n';
  }
  out << "TRIPLES\t" << triples_.size() << '\n';
  for (const Triple &t : triples_) {
    out << t.dataset.value << '\t' << ToNTriples(t.subject) << '\t'
        << ToNTriples(Term::FromIri(t.predicate)) << '\t'
        << ToNTriples(t.object) << '\n';
  }
  out << "END\n";
}

void EquivalenceIndex::Save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  Save(out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path);
}

EquivalenceIndex EquivalenceIndex::Load(std::istream &in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw Error(ErrorCode::kCorrupt, "empty snapshot");
  }
  if (header != kSnapshotHeader) {
    throw Error(ErrorCode::kVersion,
                "unsupported snapshot header '" + header + "'");
  }

  EquivalenceIndex index;
  SectionReader reader(in);

  const std::string kDatasets = "DATASETS";
  uint64_t n = reader.Begin(kDatasets);
  for (uint64_t i = 0; i < n; ++i) {
    auto f = reader.Row(kDatasets, 4);
    if (ParseNumber(f[0], kDatasets) != i) Corrupt(kDatasets, "ids not dense");
    DatasetId id;
    try {
      id = index.registry_.Register(UnescapeField(f[1], kDatasets),
                                    UnescapeField(f[2], kDatasets));
    } catch (const Error &e) {
      Corrupt(kDatasets, e.what());
    }
    index.registry_.SetTripleCount(id, ParseNumber(f[3], kDatasets));
  }

  const std::string kIris = "IRIS";
  n = reader.Begin(kIris);
  for (uint64_t i = 0; i < n; ++i) {
    auto f = reader.Row(kIris, 2);
    if (ParseNumber(f[0], kIris) != i) Corrupt(kIris, "ids not dense");
    std::string raw = UnescapeField(f[1], kIris);
    Iri iri;
    try {
      iri = NormalizeIri(raw);
    } catch (const Error &e) {
      Corrupt(kIris, e.what());
    }
    if (iri.str() != raw) Corrupt(kIris, "IRI not normalized");
    if (!index.iris_.empty() && !(index.iris_.back() < iri)) {
      Corrupt(kIris, "IRIs not strictly sorted");
    }
    index.iri_lookup_.emplace(iri.str(), index.iris_.size());
    index.iris_.push_back(std::move(iri));
  }

  const std::string kUnions = "UNIONS";
  n = reader.Begin(kUnions);
  if (n != index.iris_.size()) Corrupt(kUnions, "row count differs from IRIS");
  uint32_t next_entity = 0;
  for (uint64_t i = 0; i < n; ++i) {
    auto f = reader.Row(kUnions, 2);
    if (ParseNumber(f[0], kUnions) != i) Corrupt(kUnions, "ids not dense");
    uint64_t e = ParseNumber(f[1], kUnions);
    if (e > next_entity) Corrupt(kUnions, "entity ids not in order");
    if (e == next_entity) ++next_entity;
    index.iri_entity_.push_back(static_cast<uint32_t>(e));
  }

  const std::string kLabels = "LABELS";
  n = reader.Begin(kLabels);
  std::vector<LabelRecord> labels;
  for (uint64_t i = 0; i < n; ++i) {
    auto f = reader.Row(kLabels, 3);
    LabelRecord label;
    label.entity = EntityId{static_cast<uint32_t>(ParseNumber(f[0], kLabels))};
    try {
      label.predicate = NormalizeIri(UnescapeField(f[1], kLabels));
    } catch (const Error &e) {
      Corrupt(kLabels, e.what());
    }
    label.text = UnescapeField(f[2], kLabels);
    labels.push_back(std::move(label));
  }

  const std::string kTriples = "TRIPLES";
  n = reader.Begin(kTriples);
  for (uint64_t i = 0; i < n; ++i) {
    auto f = reader.Row(kTriples, 4);
    DatasetId dataset{static_cast<uint32_t>(ParseNumber(f[0], kTriples))};
    if (dataset.value >= index.registry_.size()) {
      Corrupt(kTriples, "unknown dataset id");
    }
    std::string line = std::string(f[1]) + " " + std::string(f[2]) + " " +
                       std::string(f[3]) + " .";
    std::optional<Triple> triple;
    try {
      triple = ParseNTriplesLine(line, dataset);
    } catch (const Error &e) {
      Corrupt(kTriples, e.what());
    }
    if (!triple) Corrupt(kTriples, "empty row");
    if (!index.triples_.empty() && !(index.triples_.back() < *triple)) {
      Corrupt(kTriples, "rows not strictly sorted");
    }
    for (const Term *term : {&triple->subject, &triple->object}) {
      if (term->is_iri() && !index.iri_lookup_.count(term->value)) {
        Corrupt(kTriples, "IRI missing from IRIS: " + term->value);
      }
    }
    index.triples_.push_back(std::move(*triple));
  }
  reader.End();

  // UNIONS must be exactly the sameAs closure of TRIPLES.
  UnionFind closure(index.iris_.size());
  for (const Triple &t : index.triples_) {
    if (t.predicate.str() == vocab::kOwlSameAs && t.subject.is_iri() &&
        t.object.is_iri()) {
      closure.Union(index.IriId(t.subject.value), index.IriId(t.object.value));
    }
  }
  std::unordered_map<uint32_t, uint32_t> entity_of_root, root_of_entity;
  for (uint32_t i = 0; i < index.iris_.size(); ++i) {
    uint32_t root = closure.Find(i);
    uint32_t entity = index.iri_entity_[i];
    auto [a, fresh_root] = entity_of_root.emplace(root, entity);
    auto [b, fresh_entity] = root_of_entity.emplace(entity, root);
    if (a->second != entity || b->second != root) {
      Corrupt(kUnions, "does not match the sameAs triples");
    }
  }

  index.Finish();
  if (index.labels_ != labels) Corrupt(kLabels, "does not match TRIPLES");
  std::vector<bool> used(index.iris_.size(), false);
  for (const Triple &t : index.triples_) {
    if (t.subject.is_iri()) used[index.IriId(t.subject.value)] = true;
    if (t.object.is_iri()) used[index.IriId(t.object.value)] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    Corrupt(kIris, "IRI not referenced by any triple");
  }
  return index;
}

EquivalenceIndex EquivalenceIndex::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return Load(in);
}

}  // namespace gptlods
