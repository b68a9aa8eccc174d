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

#ifndef GPTLODS_UNICODE_H_
#define GPTLODS_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gptlods {

// Decodes UTF-8 into code points. Malformed sequences decode to U+FFFD, one
// replacement per offending byte, so offsets stay well defined for any input.
std::u32string DecodeUtf8(std::string_view text);

// Encodes code points as UTF-8.
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t cp, std::string *out);

bool IsUnicodeSpace(char32_t cp);
bool IsUnicodePunctuation(char32_t cp);

// Simple one-to-one lowercase mapping covering Latin, Greek and Cyrillic.
char32_t ToLower(char32_t cp);

// A word token with code-point offsets into the original text.
struct Token {
  std::string text;  // lowercased UTF-8
  size_t start;      // inclusive
  size_t end;        // exclusive
};

// Splits on Unicode whitespace and punctuation and lowercases each token.
std::vector<Token> Tokenize(std::u32string_view text);
std::vector<Token> Tokenize(std::string_view utf8);

// Lowercased token strings only.
std::vector<std::string> NormalizedTokens(std::string_view utf8);

// Code-point slice [start, end) of a UTF-8 string.
std::string Utf8Slice(std::u32string_view text, size_t start, size_t end);

}  // namespace gptlods

#endif  // GPTLODS_UNICODE_H_
