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

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"
#include "unicode.h"

namespace gptlods {
namespace {

using testing::MakeLiteralTriple;
using testing::MakeRegistry;
using testing::MakeTriple;

constexpr char kSkosAlt[] = "http://www.w3.org/2004/02/skos/core#altLabel";
constexpr char kSkosPref[] = "http://www.w3.org/2004/02/skos/core#prefLabel";
constexpr char kFoafName[] = "http://xmlns.com/foaf/0.1/name";
constexpr char kComment[] = "http://www.w3.org/2000/01/rdf-schema#comment";

LabelTable TableFor(const std::vector<Triple> &triples,
                    Stoplist stoplist = Stoplist::Default()) {
  static std::vector<std::unique_ptr<EquivalenceIndex>> keep_alive;
  keep_alive.push_back(std::make_unique<EquivalenceIndex>(
      EquivalenceIndex::Build(triples, MakeRegistry(1))));
  return LabelTable::Extract(*keep_alive.back(), std::move(stoplist));
}

TEST(StoplistTest, DefaultListHasFiftyWords) {
  Stoplist list = Stoplist::Default();
  EXPECT_EQ(list.size(), 50u);
  EXPECT_TRUE(list.Contains("the"));
  EXPECT_TRUE(list.Contains("of"));
  EXPECT_TRUE(list.Contains("in"));
  EXPECT_FALSE(list.Contains("aristotle"));
}

TEST(StoplistTest, CompiledListMatchesShippedFile) {
  Stoplist shipped =
      Stoplist::FromFile(testing::SourcePath("data/stopwords.txt"));
  Stoplist compiled = Stoplist::Default();
  EXPECT_EQ(shipped.size(), compiled.size());
  std::string text = testing::ReadFile(testing::SourcePath("data/stopwords.txt"));
  std::istringstream in(text);
  for (std::string word; std::getline(in, word);) {
    if (!word.empty()) EXPECT_TRUE(compiled.Contains(word)) << word;
  }
}

TEST(StoplistTest, MissingFileIsIoError) {
  try {
    Stoplist::FromFile("/nonexistent/stopwords.txt");
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(LabelTableTest, Athens3Forms) {
  EquivalenceIndex index = testing::BuildAthens3();
  LabelTable table = LabelTable::Extract(index, Stoplist::Default());
  // Four label triples; "Aristotle" occurs twice on one class.
  ASSERT_EQ(table.forms().size(), 3u);
  std::set<std::string> texts;
  for (const SurfaceForm &f : table.forms()) texts.insert(f.text);
  EXPECT_EQ(texts, (std::set<std::string>{"Aristotle", "Stagira", "Chalkidiki"}));

  EntityId aristotle = *index.Resolve("http://ex.org/dbp/Aristotle");
  EntityId stagira = *index.Resolve("http://ex.org/dbp/Stagira");
  EXPECT_EQ(table.Lookup({"aristotle"}), std::vector<EntityId>{aristotle});
  EXPECT_EQ(table.Lookup({"stagira"}), std::vector<EntityId>{stagira});
  EXPECT_TRUE(table.Lookup({"aristotle", "onassis"}).empty());
  EXPECT_TRUE(table.Lookup({}).empty());
  EXPECT_EQ(table.max_tokens(), 1u);
}

TEST(LabelTableTest, WhitespaceOnlyLabelIsSkipped) {
  LabelTable table = TableFor(
      {MakeLiteralTriple("http://a", testing::kRdfsLabel, "  ", 0)});
  EXPECT_TRUE(table.forms().empty());
}

TEST(LabelTableTest, SharedLabelGivesOneFormPerClass) {
  LabelTable table = TableFor(
      {MakeLiteralTriple("http://fr/Paris", testing::kRdfsLabel, "Paris", 0),
       MakeLiteralTriple("http://us/Paris", testing::kRdfsLabel, "Paris", 0)});
  ASSERT_EQ(table.forms().size(), 2u);
  EXPECT_EQ(table.forms()[0].text, table.forms()[1].text);
  EXPECT_EQ(table.Lookup({"paris"}),
            (std::vector<EntityId>{EntityId{0}, EntityId{1}}));
}

TEST(LabelTableTest, OnlyLabelPredicatesCount) {
  LabelTable table = TableFor(
      {MakeLiteralTriple("http://a", kSkosPref, "Alpha", 0),
       MakeLiteralTriple("http://b", kSkosAlt, "Beta", 0),
       MakeLiteralTriple("http://c", kFoafName, "Gamma", 0),
       MakeLiteralTriple("http://d", kComment, "Delta", 0),
       MakeTriple("http://e", testing::kRdfsLabel, "http://not-a-literal", 0)});
  std::set<std::string> texts;
  for (const SurfaceForm &f : table.forms()) texts.insert(f.text);
  EXPECT_EQ(texts, (std::set<std::string>{"Alpha", "Beta", "Gamma"}));
}

TEST(LabelTableTest, SmallestPredicateIsRecorded) {
  LabelTable table = TableFor(
      {MakeLiteralTriple("http://a", kFoafName, "Alpha", 0),
       MakeLiteralTriple("http://a", testing::kRdfsLabel, "Alpha", 0)});
  ASSERT_EQ(table.forms().size(), 1u);
  EXPECT_EQ(table.forms()[0].source_predicate.str(), testing::kRdfsLabel);
}

TEST(LabelTableTest, SingleStopwordLabelsAreSuppressed) {
  LabelTable table = TableFor(
      {MakeLiteralTriple("http://a", testing::kRdfsLabel, "The", 0),
       MakeLiteralTriple("http://b", testing::kRdfsLabel, "The Hague", 0)});
  ASSERT_EQ(table.forms().size(), 1u);
  EXPECT_EQ(table.forms()[0].text, "The Hague");
  EXPECT_EQ(table.Lookup({"the", "hague"}).size(), 1u);
  EXPECT_EQ(table.max_tokens(), 2u);
}

TEST(LabelTableTest, CustomStoplist) {
  LabelTable table =
      TableFor({MakeLiteralTriple("http://a", testing::kRdfsLabel, "Foo", 0)},
               Stoplist::FromText("foo\n"));
  EXPECT_TRUE(table.forms().empty());
}

TEST(LabelTableTest, FormsRoundTripThroughLookup) {
  std::mt19937_64 rng(41);
  const std::vector<std::string> words = {
      "Río", "de", "la", "Plata", "ΑΘΗΝΑ", "Москва", "New-York", "the", " ",
      "St.", "Louis", "O'Neil", "a"};
  for (int round = 0; round < 50; ++round) {
    std::vector<Triple> triples;
    for (int i = 0; i < 30; ++i) {
      std::string label;
      for (size_t k = 0, n = 1 + rng() % 4; k < n; ++k) {
        if (k) label += " ";
        label += words[rng() % words.size()];
      }
      triples.push_back(MakeLiteralTriple(
          "http://x/" + std::to_string(rng() % 10), testing::kRdfsLabel, label,
          0));
    }
    LabelTable table = TableFor(triples);
    for (const SurfaceForm &form : table.forms()) {
      ASSERT_FALSE(form.normalized_tokens.empty());
      EXPECT_EQ(form.normalized_tokens, NormalizedTokens(form.text));
      std::vector<EntityId> hits = table.Lookup(form.normalized_tokens);
      EXPECT_TRUE(std::is_sorted(hits.begin(), hits.end()));
      EXPECT_NE(std::find(hits.begin(), hits.end(), form.entity), hits.end());
    }
  }
}

}  // namespace
}  // namespace gptlods
