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

#include "rdf.h"

#include <cstdio>
#include <fstream>
#include <tuple>

#include "unicode.h"

namespace gptlods {

namespace vocab {
bool IsLabelPredicate(std::string_view iri) {
  return iri == kRdfsLabel || iri == kSkosPrefLabel || iri == kSkosAltLabel ||
         iri == kFoafName;
}
}  // namespace vocab

namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

char AsciiLower(char c) { return (c >= 'A' && c <= 'Z') ? c + 32 : c; }

[[noreturn]] void Fail(const std::string &reason) {
  throw Error(ErrorCode::kParse, reason);
}

// Cursor over a single N-Triples line.
class LineScanner {
 public:
  explicit LineScanner(std::string_view line) : line_(line) {}

  bool done() const { return pos_ >= line_.size(); }
  char peek() const { return done() ? '\0' : line_[pos_]; }
  size_t pos() const { return pos_; }

  void SkipSpace() {
    while (!done() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  // Subject: IRI or blank node.
  Term ReadSubject() {
    if (peek() == '<') return Term::FromIri(ReadIri());
    if (peek() == '_') return ReadBlank();
    Fail("expected IRI or blank node in subject position");
  }

  Iri ReadPredicate() {
    if (peek() != '<') Fail("expected IRI in predicate position");
    return ReadIri();
  }

  Term ReadObject() {
    switch (peek()) {
      case '<':
        return Term::FromIri(ReadIri());
      case '_':
        return ReadBlank();
      case '"':
        return ReadLiteral();
      default:
        Fail("expected IRI, blank node or literal in object position");
    }
  }

  void ExpectEnd() {
    SkipSpace();
    if (peek() != '.') Fail("missing terminating '.'");
    ++pos_;
    SkipSpace();
    if (!done() && peek() != '#') Fail("unexpected content after '.'");
  }

 private:
  Iri ReadIri() {
    ++pos_;  // '<'
    std::string raw;
    for (;;) {
      if (done()) Fail("unterminated IRI");
      char c = line_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        char e = peek();
        if (e != 'u' && e != 'U') Fail("invalid escape in IRI");
        AppendUtf8(ReadHexEscape(), &raw);
        continue;
      }
      unsigned char uc = static_cast<unsigned char>(c);
      if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`') {
        Fail("invalid character in IRI");
      }
      raw.push_back(c);
      ++pos_;
    }
    if (raw.empty()) Fail("empty IRI");
    try {
      return NormalizeIri(raw);
    } catch (const Error &e) {
      Fail(std::string("invalid IRI: ") + e.what());
    }
  }

  Term ReadBlank() {
    if (line_.substr(pos_, 2) != "_:") Fail("malformed blank node");
    size_t start = pos_;
    pos_ += 2;
    size_t label_start = pos_;
    while (!done()) {
      char c = line_[pos_];
      unsigned char uc = static_cast<unsigned char>(c);
      if (IsAlpha(c) || IsDigit(c) || c == '_' || c == '-' || c == '.' ||
          uc >= 0x80) {
        ++pos_;
      } else {
        break;
      }
    }
    // A trailing '.' belongs to the statement terminator.
    while (pos_ > label_start && line_[pos_ - 1] == '.') --pos_;
    if (pos_ == label_start) Fail("empty blank node label");
    char first = line_[label_start];
    if (first == '-' || first == '.') Fail("malformed blank node label");
    return Term::Blank(std::string(line_.substr(start, pos_ - start)));
  }

  Term ReadLiteral() {
    ++pos_;  // '"'
    std::string value;
    for (;;) {
      if (done()) Fail("unterminated literal");
      char c = line_[pos_];
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        if (done()) Fail("unterminated escape");
        char e = line_[pos_];
        switch (e) {
          case 't': value.push_back('\t'); ++pos_; break;
          case 'b': value.push_back('\b'); ++pos_; break;
          case 'n': value.push_back('\n'); ++pos_; break;
          case 'r': value.push_back('\r'); ++pos_; break;
          case 'f': value.push_back('\f'); ++pos_; break;
          case '"': value.push_back('"'); ++pos_; break;
          case '\'': value.push_back('\''); ++pos_; break;
          case '\\': value.push_back('\\'); ++pos_; break;
          case 'u':
          case 'U':
            AppendUtf8(ReadHexEscape(), &value);
            break;
          default:
            Fail("invalid escape in literal");
        }
        continue;
      }
      if (c == '\n' || c == '\r') Fail("raw line break in literal");
      value.push_back(c);
      ++pos_;
    }
    if (line_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      if (peek() != '<') Fail("expected datatype IRI");
      Iri datatype = ReadIri();
      return Term::Literal(std::move(value), std::move(datatype));
    }
    if (peek() == '@') {
      ++pos_;
      size_t start = pos_;
      while (!done() && IsAlpha(peek())) ++pos_;
      if (pos_ == start) Fail("empty language tag");
      while (peek() == '-') {
        ++pos_;
        size_t sub = pos_;
        while (!done() && (IsAlpha(peek()) || IsDigit(peek()))) ++pos_;
        if (pos_ == sub) Fail("malformed language tag");
      }
      return Term::Literal(std::move(value), std::nullopt,
                           std::string(line_.substr(start, pos_ - start)));
    }
    return Term::Literal(std::move(value));
  }

  // Reads \uXXXX or \UXXXXXXXX; pos_ points at the 'u' or 'U'.
  char32_t ReadHexEscape() {
    int digits = line_[pos_] == 'u' ? 4 : 8;
    ++pos_;
    if (pos_ + digits > line_.size()) Fail("truncated unicode escape");
    char32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      char h = line_[pos_ + i];
      int v;
      if (IsDigit(h)) {
        v = h - '0';
      } else if (h >= 'a' && h <= 'f') {
        v = h - 'a' + 10;
      } else if (h >= 'A' && h <= 'F') {
        v = h - 'A' + 10;
      } else {
        Fail("invalid hex digit in unicode escape");
      }
      cp = cp * 16 + v;
    }
    pos_ += digits;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      Fail("unicode escape out of range");
    }
    return cp;
  }

  std::string_view line_;
  size_t pos_ = 0;
};

void AppendHexEscape(char32_t cp, std::string *out) {
  char buf[12];
  if (cp <= 0xFFFF) {
    std::snprintf(buf, sizeof(buf), "\\u%04X", static_cast<unsigned>(cp));
  } else {
    std::snprintf(buf, sizeof(buf), "\\U%08X", static_cast<unsigned>(cp));
  }
  out->append(buf);
}

std::string EscapeIri(const std::string &iri) {
  std::string out;
  for (char c : iri) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      AppendHexEscape(uc, &out);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string EscapeLiteral(const std::string &value) {
  std::string out;
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
          AppendHexEscape(static_cast<unsigned char>(c), &out);
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

auto TermKey(const Term &t) {
  return std::tie(t.kind, t.value, t.datatype, t.language);
}

}  // namespace

Iri NormalizeIri(std::string_view raw) {
  size_t begin = 0;
  size_t end = raw.size();
  while (begin < end && IsAsciiSpace(raw[begin])) ++begin;
  while (end > begin && IsAsciiSpace(raw[end - 1])) --end;
  std::string_view s = raw.substr(begin, end - begin);
  if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "empty IRI");

  size_t colon = s.find(':');
  if (colon == std::string_view::npos || colon == 0 || !IsAlpha(s[0])) {
    throw Error(ErrorCode::kInvalidArgument,
                "IRI has no scheme: " + std::string(s));
  }
  for (size_t i = 1; i < colon; ++i) {
    char c = s[i];
    if (!IsAlpha(c) && !IsDigit(c) && c != '+' && c != '-' && c != '.') {
      throw Error(ErrorCode::kInvalidArgument,
                  "IRI has no scheme: " + std::string(s));
    }
  }

  std::string out(s);
  for (size_t i = 0; i < colon; ++i) out[i] = AsciiLower(out[i]);
  if (s.substr(colon + 1, 2) == "//") {
    size_t auth_begin = colon + 3;
    size_t auth_end = s.find_first_of("/?#", auth_begin);
    if (auth_end == std::string_view::npos) auth_end = s.size();
    for (size_t i = auth_begin; i < auth_end; ++i) out[i] = AsciiLower(out[i]);
  }
  return Iri(std::move(out));
}

DatasetId DatasetRegistry::Register(const std::string &name,
                                    const std::string &source_path) {
  if (by_name_.count(name)) {
    throw Error(ErrorCode::kDuplicate, "dataset already registered: " + name);
  }
  DatasetId id{static_cast<uint32_t>(datasets_.size())};
  datasets_.push_back({id, name, source_path, 0});
  by_name_.emplace(name, id.value);
  return id;
}

void DatasetRegistry::SetTripleCount(DatasetId id, uint64_t count) {
  if (id.value >= datasets_.size()) {
    throw Error(ErrorCode::kNotFound, "unknown dataset id");
  }
  datasets_[id.value].triple_count = count;
}

std::optional<DatasetId> DatasetRegistry::Find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return DatasetId{it->second};
}

const DatasetInfo &DatasetRegistry::at(DatasetId id) const {
  if (id.value >= datasets_.size()) {
    throw Error(ErrorCode::kNotFound, "unknown dataset id");
  }
  return datasets_[id.value];
}

Term Term::FromIri(const Iri &iri) {
  Term t;
  t.kind = TermKind::kIri;
  t.value = iri.str();
  return t;
}

Term Term::Literal(std::string lexical, std::optional<Iri> datatype,
                   std::optional<std::string> language) {
  Term t;
  t.kind = TermKind::kLiteral;
  t.value = std::move(lexical);
  t.datatype = std::move(datatype);
  t.language = std::move(language);
  return t;
}

Term Term::Blank(std::string label) {
  Term t;
  t.kind = TermKind::kBlank;
  t.value = std::move(label);
  return t;
}

bool operator<(const Term &a, const Term &b) { return TermKey(a) < TermKey(b); }

bool operator<(const Triple &a, const Triple &b) {
  if (a.dataset != b.dataset) return a.dataset < b.dataset;
  if (a.subject != b.subject) return a.subject < b.subject;
  if (a.predicate != b.predicate) return a.predicate < b.predicate;
  return a.object < b.object;
}

ParseFailure::ParseFailure(ParseError error)
    : Error(ErrorCode::kParse, "line " + std::to_string(error.line_number) +
                                   ": " + error.reason),
      error_(std::move(error)) {}

std::optional<Triple> ParseNTriplesLine(std::string_view line,
                                        DatasetId dataset) {
  LineScanner scan(line);
  scan.SkipSpace();
  if (scan.done() || scan.peek() == '#') return std::nullopt;
  Triple triple;
  triple.dataset = dataset;
  triple.subject = scan.ReadSubject();
  scan.SkipSpace();
  triple.predicate = scan.ReadPredicate();
  scan.SkipSpace();
  triple.object = scan.ReadObject();
  scan.ExpectEnd();
  return triple;
}

ParseResult ParseNTriples(std::istream &in, DatasetId dataset,
                          ParseMode mode) {
  ParseResult result;
  std::string line;
  uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      std::optional<Triple> triple = ParseNTriplesLine(line, dataset);
      if (triple) result.triples.push_back(std::move(*triple));
    } catch (const Error &e) {
      ParseError error{line_number, e.what(), line};
      if (mode == ParseMode::kStrict) throw ParseFailure(std::move(error));
      result.errors.push_back(std::move(error));
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "stream read failure");
  return result;
}

ParseResult ParseNTriplesFile(const std::string &path, DatasetId dataset,
                              ParseMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ParseNTriples(in, dataset, mode);
}

std::string ToNTriples(const Term &term) {
  switch (term.kind) {
    case TermKind::kIri:
      return "<" + EscapeIri(term.value) + ">";
    case TermKind::kBlank:
      return term.value;
    case TermKind::kLiteral: {
      std::string out = "\"" + EscapeLiteral(term.value) + "\"";
      if (term.datatype) {
        out += "^^<" + EscapeIri(term.datatype->str()) + ">";
      } else if (term.language) {
        out += "@" + *term.language;
      }
      return out;
    }
  }
  return "";
}

std::string ToNTriples(const Triple &triple) {
  return ToNTriples(triple.subject) + " <" +
         EscapeIri(triple.predicate.str()) + "> " + ToNTriples(triple.object) +
         " .";
}

}  // namespace gptlods
