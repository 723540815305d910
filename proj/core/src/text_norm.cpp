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

#include "homog2p/text_norm.hpp"

#include <zlib.h>

#include <algorithm>

#include "file_io.hpp"
#include "homog2p/error.hpp"
#include "unicode.hpp"

namespace homog2p {

namespace {

// Character folds applied after NFC. Arabic Yeh and Kaf fold to their Persian
// forms so that lexicon keys and corpus text agree regardless of the source
// keyboard layout.
char32_t fold_char(char32_t c) {
  switch (c) {
    case U'ي':  // ARABIC LETTER YEH
      return U'ی';
    case U'ك':  // ARABIC LETTER KAF
      return U'ک';
    default:
      return c;
  }
}

}  // namespace

std::string normalize(std::string_view text) {
  std::u32string cps = uni::nfc(uni::decode_utf8(text));
  for (char32_t& c : cps) c = fold_char(c);

  std::u32string out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (char32_t c : cps) {
    if (uni::is_whitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return uni::encode_utf8(out);
}

bool is_normalized(std::string_view text) { return normalize(text) == text; }

std::vector<TokenSpan> tokenize_spans(std::string_view normalized) {
  struct Cp {
    char32_t cp;
    std::size_t byte_begin;
    std::size_t byte_end;
  };
  // Decode with positions. Input is already valid UTF-8 per the normalize()
  // precondition, but decode strictly anyway so garbage fails loudly.
  std::u32string cps = uni::decode_utf8(normalized);
  std::vector<Cp> pos;
  pos.reserve(cps.size());
  {
    std::size_t byte = 0;
    for (char32_t c : cps) {
      std::size_t len = c < 0x80 ? 1 : c < 0x800 ? 2 : c < 0x10000 ? 3 : 4;
      pos.push_back({c, byte, byte + len});
      byte += len;
    }
  }

  std::vector<TokenSpan> out;
  std::size_t i = 0;
  const std::size_t n = pos.size();
  while (i < n) {
    if (uni::is_whitespace(pos[i].cp)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !uni::is_whitespace(pos[j].cp)) ++j;
    // Strip leading/trailing punctuation and edge ZWNJ; ZWNJ survives only
    // between two non-space characters of the same token.
    std::size_t a = i;
    std::size_t b = j;
    while (a < b && (uni::is_punct(pos[a].cp) || pos[a].cp == uni::kZwnj)) ++a;
    while (b > a && (uni::is_punct(pos[b - 1].cp) || pos[b - 1].cp == uni::kZwnj)) --b;
    if (a < b) {
      std::u32string word;
      for (std::size_t k = a; k < b; ++k) word.push_back(pos[k].cp);
      out.push_back({uni::encode_utf8(word), pos[a].byte_begin, pos[b - 1].byte_end});
    }
    i = j;
  }
  return out;
}

std::vector<Token> tokenize(std::string_view normalized) {
  std::vector<Token> out;
  for (auto& span : tokenize_spans(normalized)) {
    out.push_back(std::move(span.text));
  }
  return out;
}

std::vector<Token> content_words(const std::vector<Token>& tokens, const StopwordSet& stop) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (!stop.contains(t)) out.push_back(t);
  }
  return out;
}

void StopwordSet::insert_normalized(const std::string& raw, std::size_t line_no) {
  std::string word = normalize(raw);
  if (word.empty()) {
    throw_validation("empty-stopword",
                     "stopword entry normalizes to empty at line " + std::to_string(line_no));
  }
  if (word.find(' ') != std::string::npos) {
    throw_validation("multiword-stopword",
                     "stopword entry is not a single token at line " + std::to_string(line_no));
  }
  words_.insert(std::move(word));
}

StopwordSet StopwordSet::from_words(const std::vector<std::string>& words) {
  StopwordSet set;
  std::size_t line = 0;
  for (const auto& w : words) set.insert_normalized(w, ++line);
  return set;
}

StopwordSet StopwordSet::load(std::istream& in) {
  StopwordSet set;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    set.insert_normalized(line, line_no);
  }
  return set;
}

StopwordSet StopwordSet::load_file(const std::string& path) {
  auto in = detail::open_input(path);
  return load(in);
}

std::uint32_t StopwordSet::fingerprint() const {
  uLong crc = crc32(0L, Z_NULL, 0);
  for (const auto& w : words_) {
    crc = crc32(crc, reinterpret_cast<const Bytef*>(w.data()), static_cast<uInt>(w.size()));
    crc = crc32(crc, reinterpret_cast<const Bytef*>("\n"), 1);
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace homog2p
