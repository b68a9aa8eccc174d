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

#include "label_index.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stopwords_data.h"
#include "unicode.h"

namespace gptlods {

Stoplist Stoplist::Default() { return FromText(kDefaultStopwords); }

Stoplist Stoplist::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open stoplist " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromText(buffer.str());
}

Stoplist Stoplist::FromText(std::string_view text) {
  Stoplist list;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) list.words_.insert(line);
  }
  return list;
}

std::string LabelTable::Key(const std::vector<std::string> &tokens) {
  std::string key;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) key.push_back('\x1f');
    key += tokens[i];
  }
  return key;
}

LabelTable LabelTable::Extract(const EquivalenceIndex &index,
                               Stoplist stoplist) {
  LabelTable table;
  table.stoplist_ = std::move(stoplist);

  // labels() is sorted by (entity, text, predicate): the first record of each
  // (entity, text) run carries the smallest predicate.
  const std::vector<LabelRecord> &labels = index.labels();
  for (size_t i = 0; i < labels.size(); ++i) {
    const LabelRecord &label = labels[i];
    if (i > 0 && labels[i - 1].entity == label.entity &&
        labels[i - 1].text == label.text) {
      continue;
    }
    std::vector<std::string> tokens = NormalizedTokens(label.text);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && table.stoplist_.Contains(tokens[0])) continue;

    std::vector<EntityId> &ids = table.by_tokens_[Key(tokens)];
    if (std::find(ids.begin(), ids.end(), label.entity) == ids.end()) {
      ids.push_back(label.entity);
    }
    table.max_tokens_ = std::max(table.max_tokens_, tokens.size());
    table.forms_.push_back(
        {label.text, std::move(tokens), label.entity, label.predicate});
  }
  for (auto &[key, ids] : table.by_tokens_) std::sort(ids.begin(), ids.end());
  return table;
}

std::vector<EntityId> LabelTable::Lookup(
    const std::vector<std::string> &tokens) const {
  if (tokens.empty()) return {};
  auto it = by_tokens_.find(Key(tokens));
  if (it == by_tokens_.end()) return {};
  return it->second;
}

}  // namespace gptlods
