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

#ifndef GPTLODS_LABEL_INDEX_H_
#define GPTLODS_LABEL_INDEX_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "equivalence_index.h"

namespace gptlods {

// Lowercase function words that never stand alone as a surface form.
class Stoplist {
 public:
  Stoplist() = default;

  // The list shipped in data/stopwords.txt, compiled in.
  static Stoplist Default();
  // One lowercase token per line; blank lines ignored. Throws kIo.
  static Stoplist FromFile(const std::string &path);
  static Stoplist FromText(std::string_view text);

  bool Contains(std::string_view token) const {
    return words_.count(std::string(token)) > 0;
  }
  size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct SurfaceForm {
  std::string text;
  std::vector<std::string> normalized_tokens;
  EntityId entity;
  Iri source_predicate;
};

// Exact token-sequence lookup from label text to entities.
class LabelTable {
 public:
  LabelTable() = default;

  // One surface form per distinct (label text, entity) pair. Labels that
  // tokenize to nothing, or to a single stopword, are skipped.
  static LabelTable Extract(const EquivalenceIndex &index, Stoplist stoplist);

  // Entities whose label tokenizes to exactly `tokens`, ascending by id.
  std::vector<EntityId> Lookup(const std::vector<std::string> &tokens) const;

  const std::vector<SurfaceForm> &forms() const { return forms_; }
  const Stoplist &stoplist() const { return stoplist_; }
  size_t max_tokens() const { return max_tokens_; }

 private:
  static std::string Key(const std::vector<std::string> &tokens);

  Stoplist stoplist_;
  std::vector<SurfaceForm> forms_;
  std::unordered_map<std::string, std::vector<EntityId>> by_tokens_;
  size_t max_tokens_ = 0;
};

}  // namespace gptlods

#endif  // GPTLODS_LABEL_INDEX_H_
