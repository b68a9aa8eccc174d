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


#include "unicode.h"

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"

namespace gptlods {
namespace {

TEST(Utf8Test, DecodesMultiByteSequences) {
  std::u32string cps = DecodeUtf8("a\xC3\xA9\xE2\x82\xAC\xF0\x9F\x98\x80");
  ASSERT_EQ(cps.size(), 4u);
  EXPECT_EQ(cps[0], U'a');
  EXPECT_EQ(cps[1], U'é');
  EXPECT_EQ(cps[2], U'€');
  EXPECT_EQ(cps[3], U'\U0001F600');
}

TEST(Utf8Test, MalformedBytesBecomeReplacementCharacters) {
  EXPECT_EQ(DecodeUtf8("\xFF"), std::u32string(1, 0xFFFD));
  // Truncated two-byte sequence at the end of input.
  EXPECT_EQ(DecodeUtf8("a\xC3"), (std::u32string{U'a', 0xFFFD}));
  // Overlong encoding of '/'.
  EXPECT_EQ(DecodeUtf8("\xC0\xAF"), (std::u32string{0xFFFD, 0xFFFD}));
  // Encoded surrogate.
  EXPECT_EQ(DecodeUtf8("\xED\xA0\x80").front(), 0xFFFD);
}

TEST(Utf8Test, EncodeDecodeRoundTripsRandomCodePoints) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<uint32_t> dist(1, 0x10FFFF);
  for (int round = 0; round < 200; ++round) {
    std::u32string cps;
    for (int i = 0; i < 20; ++i) {
      char32_t cp = dist(rng);
      if (cp >= 0xD800 && cp <= 0xDFFF) cp = U'x';
      cps.push_back(cp);
    }
    std::string utf8 = EncodeUtf8(cps);
    EXPECT_EQ(DecodeUtf8(utf8), cps);
    EXPECT_EQ(testing::CodePointLength(utf8), cps.size());
  }
}

TEST(CharacterClassTest, SpacesAndPunctuation) {
  EXPECT_TRUE(IsUnicodeSpace(U' '));
  EXPECT_TRUE(IsUnicodeSpace(U' '));
  EXPECT_TRUE(IsUnicodeSpace(U'　'));
  EXPECT_FALSE(IsUnicodeSpace(U'a'));
  EXPECT_TRUE(IsUnicodePunctuation(U','));
  EXPECT_TRUE(IsUnicodePunctuation(U'\u2014'));
  EXPECT_TRUE(IsUnicodePunctuation(U'«'));
  EXPECT_FALSE(IsUnicodePunctuation(U'é'));
  EXPECT_FALSE(IsUnicodePunctuation(U'7'));
}

TEST(LowercaseTest, CoversLatinGreekCyrillic) {
  EXPECT_EQ(ToLower(U'A'), U'a');
  EXPECT_EQ(ToLower(U'É'), U'é');
  EXPECT_EQ(ToLower(U'Ā'), U'ā');
  EXPECT_EQ(ToLower(U'İ'), U'i');
  EXPECT_EQ(ToLower(U'Α'), U'α');
  EXPECT_EQ(ToLower(U'Ά'), U'ά');
  EXPECT_EQ(ToLower(U'А'), U'а');
  EXPECT_EQ(ToLower(U'Ё'), U'ё');
  EXPECT_EQ(ToLower(U'×'), U'×');
}

TEST(TokenizeTest, OffsetsAreCodePoints) {
  std::vector<Token> tokens = Tokenize("Aristotle was born in Stagira.");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].text, "aristotle");
  EXPECT_EQ(tokens[0].start, 0u);
  EXPECT_EQ(tokens[0].end, 9u);
  EXPECT_EQ(tokens[4].text, "stagira");
  EXPECT_EQ(tokens[4].start, 22u);
  EXPECT_EQ(tokens[4].end, 29u);

  // Two-byte characters count once.
  tokens = Tokenize("\xC3\x89t\xC3\xA9 Ath\xC3\xA8nes");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].text, "\xC3\xA9t\xC3\xA9");
  EXPECT_EQ(tokens[1].start, 4u);
  EXPECT_EQ(tokens[1].end, 11u);
}

TEST(TokenizeTest, EmptyAndSeparatorOnlyInputs) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("  ,.;  \t\n").empty());
  EXPECT_EQ(NormalizedTokens("New-York, USA"),
            (std::vector<std::string>{"new", "york", "usa"}));
}

TEST(TokenizeTest, TokensMatchTextSlices) {
  std::mt19937 rng(11);
  const std::vector<std::string> pieces = {
      "Ab", " ", ",", "\xC3\xA9", "\xCE\xA3", "x", "\xE2\x80\x94", "9", "\t",
      "\xF0\x9F\x98\x80"};
  for (int round = 0; round < 300; ++round) {
    std::string text;
    for (int i = 0; i < 15; ++i) text += pieces[rng() % pieces.size()];
    std::u32string cps = DecodeUtf8(text);
    size_t prev_end = 0;
    for (const Token &t : Tokenize(text)) {
      ASSERT_LT(t.start, t.end);
      ASSERT_LE(prev_end, t.start);
      std::string slice = testing::CodePointSlice(text, t.start, t.end);
      EXPECT_EQ(slice, Utf8Slice(cps, t.start, t.end));
      EXPECT_EQ(NormalizedTokens(slice), std::vector<std::string>{t.text});
      prev_end = t.end;
    }
  }
}

TEST(Utf8SliceTest, ClampsOutOfRange) {
  std::u32string cps = DecodeUtf8("abc");
  EXPECT_EQ(Utf8Slice(cps, 1, 10), "bc");
  EXPECT_EQ(Utf8Slice(cps, 5, 9), "");
  EXPECT_EQ(Utf8Slice(cps, 2, 1), "");
}

}  // namespace
}  // namespace gptlods
