// Copyright 2026 The homog2p Authors
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

#pragma once

#include <cstdint>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace homog2p {

// A token is a normalized text unit: non-empty, free of whitespace, with
// ZWNJ (U+200C) only between two non-space characters. Tokens are produced
// by tokenize(); the invariants hold by construction.
using Token = std::string;

// normalize() maps raw text to canonical form:
//   * Unicode NFC
//   * Arabic Yeh (U+064A) -> Persian Yeh (U+06CC), Arabic Kaf (U+0643) ->
//     Persian Keheh (U+06A9)
//   * runs of Unicode whitespace collapsed to a single U+0020
//   * leading/trailing whitespace removed
// Idempotent: normalize(normalize(x)) == normalize(x).
// Throws Error(validation, "invalid-utf8") on malformed input bytes.
std::string normalize(std::string_view text);

// True iff normalize(text) == text.
bool is_normalized(std::string_view text);

// A token plus the byte range of its stripped core inside the input string.
struct TokenSpan {
  Token text;
  std::size_t begin = 0;  // byte offset into the input
  std::size_t end = 0;    // one past the last byte
};

// Splits normalized text into maximal non-whitespace runs, then strips
// leading/trailing punctuation (Unicode P*) and edge ZWNJ from each run.
// Runs that become empty are dropped. Never invents characters.
std::vector<Token> tokenize(std::string_view normalized);

// Same but reports where each surviving token sits in the input. Used by the
// augmenters for in-place word surgery.
std::vector<TokenSpan> tokenize_spans(std::string_view normalized);

// Normalized word set, loaded from plain-text config files: UTF-8, one entry
// per line, '#'-prefixed comment lines ignored, entries normalized on load.
// Also used for the homograph exclusions file, which shares the format.
class StopwordSet {
 public:
  StopwordSet() = default;

  static StopwordSet from_words(const std::vector<std::string>& words);
  static StopwordSet load(std::istream& in);
  static StopwordSet load_file(const std::string& path);

  bool contains(const Token& token) const { return words_.count(token) > 0; }
  bool empty() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }

  // CRC-32 over the sorted entries; stored in context databases so mismatched
  // stopword configurations are detected at load time.
  std::uint32_t fingerprint() const;

  const std::set<std::string>& words() const { return words_; }

 private:
  void insert_normalized(const std::string& raw, std::size_t line_no);

  std::set<std::string> words_;
};

// Order-preserving subsequence of `tokens` with stopwords removed.
std::vector<Token> content_words(const std::vector<Token>& tokens, const StopwordSet& stop);

}  // namespace homog2p
