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

// RDF data model and N-Triples ingestion.

#ifndef GPTLODS_RDF_H_
#define GPTLODS_RDF_H_

#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.h"

namespace gptlods {

namespace vocab {
inline constexpr std::string_view kOwlSameAs =
    "http://www.w3.org/2002/07/owl#sameAs";
inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kSkosPrefLabel =
    "http://www.w3.org/2004/02/skos/core#prefLabel";
inline constexpr std::string_view kSkosAltLabel =
    "http://www.w3.org/2004/02/skos/core#altLabel";
inline constexpr std::string_view kFoafName = "http://xmlns.com/foaf/0.1/name";
inline constexpr std::string_view kFoafDepiction =
    "http://xmlns.com/foaf/0.1/depiction";
inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

bool IsLabelPredicate(std::string_view iri);
}  // namespace vocab

// An absolute IRI in normalized form: no surrounding whitespace, lowercase
// scheme and authority. Only NormalizeIri() produces non-empty values.
class Iri {
 public:
  Iri() = default;

  const std::string &str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend bool operator==(const Iri &, const Iri &) = default;
  friend auto operator<=>(const Iri &, const Iri &) = default;

 private:
  friend Iri NormalizeIri(std::string_view raw);
  explicit Iri(std::string value) : value_(std::move(value)) {}

  std::string value_;
};

// Trims, then lowercases the scheme and the authority. Path, query and
// fragment are left untouched. Idempotent. Throws kInvalidArgument when the
// input is blank or has no scheme.
Iri NormalizeIri(std::string_view raw);

struct DatasetId {
  uint32_t value = 0;

  friend bool operator==(DatasetId, DatasetId) = default;
  friend auto operator<=>(DatasetId, DatasetId) = default;
};

struct DatasetInfo {
  DatasetId id;
  std::string name;
  std::string source_path;
  uint64_t triple_count = 0;
};

// Single-writer registry of ingested datasets. Ids are dense from 0 in
// registration order.
class DatasetRegistry {
 public:
  // Throws kDuplicate when the name is already taken.
  DatasetId Register(const std::string &name, const std::string &source_path);

  void SetTripleCount(DatasetId id, uint64_t count);

  std::optional<DatasetId> Find(std::string_view name) const;
  const DatasetInfo &at(DatasetId id) const;
  size_t size() const { return datasets_.size(); }
  const std::vector<DatasetInfo> &datasets() const { return datasets_; }

 private:
  std::vector<DatasetInfo> datasets_;
  std::unordered_map<std::string, uint32_t> by_name_;
};

enum class TermKind { kIri = 0, kLiteral = 1, kBlank = 2 };

// Node in subject or object position. For literals `value` holds the decoded
// lexical form; for blank nodes it includes the "_:" prefix.
struct Term {
  TermKind kind = TermKind::kIri;
  std::string value;
  std::optional<Iri> datatype;
  std::optional<std::string> language;

  static Term FromIri(const Iri &iri);
  static Term Literal(std::string lexical,
                      std::optional<Iri> datatype = std::nullopt,
                      std::optional<std::string> language = std::nullopt);
  static Term Blank(std::string label);

  bool is_iri() const { return kind == TermKind::kIri; }
  bool is_literal() const { return kind == TermKind::kLiteral; }
  bool is_blank() const { return kind == TermKind::kBlank; }

  friend bool operator==(const Term &, const Term &) = default;
};

// Total order on terms: kind, value, datatype, language.
bool operator<(const Term &a, const Term &b);

struct Triple {
  Term subject;  // IRI or blank node
  Iri predicate;
  Term object;
  DatasetId dataset;

  friend bool operator==(const Triple &, const Triple &) = default;
};

// Orders by dataset, then subject, predicate, object.
bool operator<(const Triple &a, const Triple &b);

struct ParseError {
  uint64_t line_number = 0;
  std::string reason;
  std::string raw_line;
};

// Strict-mode failure; carries the first offending line.
class ParseFailure : public Error {
 public:
  explicit ParseFailure(ParseError error);
  const ParseError &parse_error() const { return error_; }

 private:
  ParseError error_;
};

enum class ParseMode { kStrict, kLenient };

struct ParseResult {
  std::vector<Triple> triples;
  std::vector<ParseError> errors;
};

// Streams N-Triples from `in`, one statement per line. Comments and blank
// lines are skipped. Lenient mode records one ParseError per bad line and
// continues; strict mode throws ParseFailure on the first bad line.
ParseResult ParseNTriples(std::istream &in, DatasetId dataset,
                          ParseMode mode = ParseMode::kLenient);

// Opens `path` and parses it. Throws kIo when the file cannot be read.
ParseResult ParseNTriplesFile(const std::string &path, DatasetId dataset,
                              ParseMode mode = ParseMode::kLenient);

// Parses one statement. Returns nullopt for blank and comment-only lines.
// Throws Error(kParse) with the reason on malformed input.
std::optional<Triple> ParseNTriplesLine(std::string_view line,
                                        DatasetId dataset);

// N-Triples serialization.
std::string ToNTriples(const Term &term);
std::string ToNTriples(const Triple &triple);

}  // namespace gptlods

#endif  // GPTLODS_RDF_H_
