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


#include "test_util.h"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include "stub_server.h"

#ifndef GPTLODS_SOURCE_DIR
#error "GPTLODS_SOURCE_DIR must be defined"
#endif

namespace gptlods::testing {

using nlohmann::json;

std::string SourcePath(const std::string &relative) {
  return std::string(GPTLODS_SOURCE_DIR) + "/" + relative;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string TempDir(const std::string &tag) {
  static int counter = 0;
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("gptlods_" + tag + "_" + std::to_string(::getpid()) + "_" +
       std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

EquivalenceIndex BuildAthens3(const std::vector<std::string> &order) {
  DatasetRegistry registry;
  std::vector<Triple> triples;
  for (const std::string &name : order) {
    std::string path = SourcePath("data/athens3/" + name + ".nt");
    DatasetId id = registry.Register(name, path);
    ParseResult parsed = ParseNTriplesFile(path, id, ParseMode::kStrict);
    registry.SetTripleCount(id, parsed.triples.size());
    triples.insert(triples.end(), parsed.triples.begin(),
                   parsed.triples.end());
  }
  return EquivalenceIndex::Build(std::move(triples), std::move(registry));
}

Triple MakeTriple(const std::string &s, const std::string &p,
                  const std::string &o, uint32_t dataset) {
  return Triple{Term::FromIri(NormalizeIri(s)), NormalizeIri(p),
                Term::FromIri(NormalizeIri(o)), DatasetId{dataset}};
}

Triple MakeLiteralTriple(const std::string &s, const std::string &p,
                         const std::string &literal, uint32_t dataset) {
  return Triple{Term::FromIri(NormalizeIri(s)), NormalizeIri(p),
                Term::Literal(literal), DatasetId{dataset}};
}

DatasetRegistry MakeRegistry(size_t datasets) {
  DatasetRegistry registry;
  for (size_t i = 0; i < datasets; ++i) {
    registry.Register("ds" + std::to_string(i), "mem://" + std::to_string(i));
  }
  return registry;
}

std::set<std::set<std::string>> BfsPartition(
    const std::vector<std::string> &iris,
    const std::vector<std::pair<std::string, std::string>> &same_as) {
  std::map<std::string, std::vector<std::string>> adjacent;
  for (const std::string &iri : iris) adjacent[iri];
  for (const auto &[a, b] : same_as) {
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  std::set<std::string> seen;
  std::set<std::set<std::string>> classes;
  for (const auto &[start, unused] : adjacent) {
    if (seen.count(start)) continue;
    std::set<std::string> component;
    std::deque<std::string> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      component.insert(cur);
      for (const std::string &next : adjacent[cur]) {
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    classes.insert(std::move(component));
  }
  return classes;
}

std::set<std::set<std::string>> IndexPartition(const EquivalenceIndex &index) {
  std::set<std::set<std::string>> classes;
  for (uint32_t id = 0; id < index.entity_count(); ++id) {
    std::set<std::string> members;
    for (const Iri &iri : index.Uris(EntityId{id})) members.insert(iri.str());
    classes.insert(std::move(members));
  }
  return classes;
}

std::vector<OracleEvidence> BruteForceRelations(const EquivalenceIndex &index,
                                                const std::vector<Triple> &raw,
                                                EntityId a, EntityId b) {
  auto members_of = [&](EntityId id) {
    std::vector<std::string> out;
    for (const Iri &iri : index.Uris(id)) out.push_back(iri.str());
    return out;
  };
  auto contains = [](const std::vector<std::string> &list,
                     const std::string &v) {
    for (const std::string &x : list) {
      if (x == v) return true;
    }
    return false;
  };
  std::vector<std::string> ma = members_of(a), mb = members_of(b);
  std::vector<OracleEvidence> out;
  for (auto [from, to, mf, mt] :
       {std::tuple{a, b, &ma, &mb}, std::tuple{b, a, &mb, &ma}}) {
    std::map<std::string, OracleEvidence> by_predicate;
    for (const Triple &t : raw) {
      if (!t.subject.is_iri() || !t.object.is_iri()) continue;
      if (t.predicate.str() == kSameAs) continue;
      if (!contains(*mf, t.subject.value) || !contains(*mt, t.object.value)) {
        continue;
      }
      OracleEvidence &e = by_predicate[t.predicate.str()];
      e.subject_entity = from.value;
      e.object_entity = to.value;
      e.predicate = t.predicate.str();
      e.datasets.insert(t.dataset.value);
      e.triples.insert(std::to_string(t.dataset.value) + " " + ToNTriples(t));
    }
    for (auto &[p, e] : by_predicate) out.push_back(std::move(e));
  }
  return out;
}

std::vector<Triple> RandomKg(std::mt19937_64 &rng,
                             const RandomKgOptions &options) {
  auto pick = [&](size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
  };
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto iri = [&](size_t i) { return "http://kg.test/e" + std::to_string(i); };
  std::vector<Triple> out;
  for (size_t k = 0; k < options.triples; ++k) {
    uint32_t ds = static_cast<uint32_t>(pick(options.datasets));
    std::string s = iri(pick(options.iris));
    double r = coin(rng);
    if (r < options.same_as_share) {
      out.push_back(MakeTriple(s, kSameAs, iri(pick(options.iris)), ds));
    } else if (r < options.same_as_share + options.literal_share) {
      out.push_back(MakeLiteralTriple(s, kRdfsLabel,
                                      "name" + std::to_string(pick(50)), ds));
    } else {
      std::string p = "http://kg.test/p" + std::to_string(pick(options.predicates));
      out.push_back(MakeTriple(s, p, iri(pick(options.iris)), ds));
    }
  }
  return out;
}

namespace {

bool HasType(const json &doc, const std::string &type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  if (type == "integer") {
    return doc.is_number_integer() ||
           (doc.is_number_float() &&
            doc.get<double>() == static_cast<double>(
                                     static_cast<int64_t>(doc.get<double>())));
  }
  if (type == "number") return doc.is_number();
  throw std::runtime_error("unsupported schema type " + type);
}

}  // namespace

std::string SchemaViolation(const json &root, const json &schema,
                            const json &doc, const std::string &where) {
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"];
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("bad $ref " + ref);
    return SchemaViolation(root, root["definitions"][ref.substr(prefix.size())],
                           doc, where);
  }
  if (schema.contains("type")) {
    const json &type = schema["type"];
    bool ok = false;
    if (type.is_string()) {
      ok = HasType(doc, type);
    } else {
      for (const json &t : type) ok = ok || HasType(doc, t);
    }
    if (!ok) return where + ": expected type " + type.dump();
  }
  if (schema.contains("const") && doc != schema["const"]) {
    return where + ": expected " + schema["const"].dump();
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const json &v : schema["enum"]) found = found || v == doc;
    if (!found) return where + ": not in enum";
  }
  if (doc.is_number()) {
    double v = doc.get<double>();
    if (schema.contains("minimum") && v < schema["minimum"].get<double>()) {
      return where + ": below minimum";
    }
    if (schema.contains("maximum") && v > schema["maximum"].get<double>()) {
      return where + ": above maximum";
    }
  }
  if (doc.is_string() && schema.contains("pattern")) {
    if (!std::regex_search(doc.get<std::string>(),
                           std::regex(schema["pattern"].get<std::string>()))) {
      return where + ": does not match pattern";
    }
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema["minItems"]) {
      return where + ": too few items";
    }
    if (schema.contains("maxItems") && doc.size() > schema["maxItems"]) {
      return where + ": too many items";
    }
    if (schema.contains("items")) {
      for (size_t i = 0; i < doc.size(); ++i) {
        std::string v = SchemaViolation(root, schema["items"], doc[i],
                                        where + "[" + std::to_string(i) + "]");
        if (!v.empty()) return v;
      }
    }
  }
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const json &name : schema["required"]) {
        if (!doc.contains(name.get<std::string>())) {
          return where + ": missing " + name.get<std::string>();
        }
      }
    }
    json properties = schema.value("properties", json::object());
    for (const auto &[key, value] : doc.items()) {
      std::string at = where + "." + key;
      if (schema.contains("propertyNames")) {
        std::string v =
            SchemaViolation(root, schema["propertyNames"], json(key), at);
        if (!v.empty()) return v;
      }
      if (properties.contains(key)) {
        std::string v = SchemaViolation(root, properties[key], value, at);
        if (!v.empty()) return v;
      } else if (schema.contains("additionalProperties")) {
        const json &extra = schema["additionalProperties"];
        if (extra.is_boolean()) {
          if (!extra.get<bool>()) return at + ": unexpected property";
        } else {
          std::string v = SchemaViolation(root, extra, value, at);
          if (!v.empty()) return v;
        }
      }
    }
  }
  return "";
}

std::string ValidateAgainst(const json &root, const std::string &definition,
                            const json &doc) {
  if (!root["definitions"].contains(definition)) {
    return "schema has no definition " + definition;
  }
  return SchemaViolation(root, root["definitions"][definition], doc,
                         definition);
}

std::string StripMarkup(const std::string &html) {
  std::string no_tags;
  bool in_tag = false;
  for (char c : html) {
    if (c == '<') {
      in_tag = true;
    } else if (c == '>' && in_tag) {
      in_tag = false;
    } else if (!in_tag) {
      no_tags += c;
    }
  }
  static const std::vector<std::pair<std::string, std::string>> kEntities = {
      {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&#39;", "'"},
      {"&amp;", "&"}};
  std::string out;
  for (size_t i = 0; i < no_tags.size();) {
    bool replaced = false;
    if (no_tags[i] == '&') {
      for (const auto &[entity, ch] : kEntities) {
        if (no_tags.compare(i, entity.size(), entity) == 0) {
          out += ch;
          i += entity.size();
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) out += no_tags[i++];
  }
  return out;
}

size_t CodePointLength(const std::string &utf8) {
  size_t n = 0;
  for (unsigned char c : utf8) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string CodePointSlice(const std::string &utf8, size_t start, size_t end) {
  std::string out;
  size_t cp = 0;
  for (size_t i = 0; i < utf8.size(); ++i) {
    unsigned char c = utf8[i];
    if ((c & 0xC0) != 0x80 && i != 0) ++cp;
    if (cp >= start && cp < end) out += static_cast<char>(c);
  }
  return out;
}

std::string UnreachableUrl() {
  // Bind a port without listening, then release it.
  int sock = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  socklen_t len = sizeof(addr);
  if (sock < 0 ||
      ::bind(sock, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0 ||
      ::getsockname(sock, reinterpret_cast<sockaddr *>(&addr), &len) != 0) {
    throw std::runtime_error("cannot reserve a port");
  }
  int port = ntohs(addr.sin_port);
  ::close(sock);
  return "http://127.0.0.1:" + std::to_string(port) + "/annotate";
}

}  // namespace gptlods::testing
