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

#include "homog2p/phoneme_repr.hpp"

#include <algorithm>
#include <sstream>

#include "file_io.hpp"
#include "homog2p/error.hpp"

namespace homog2p {

const char* repr_name(Repr r) { return r == Repr::R1 ? "R1" : "R2"; }

Repr repr_from_name(std::string_view name) {
  if (name == "R1" || name == "r1") return Repr::R1;
  if (name == "R2" || name == "r2") return Repr::R2;
  throw_validation("unknown-repr", "unknown phoneme representation: " + std::string(name));
}

std::span<const std::string> PhonemeString::word(std::size_t index) const {
  if (index >= word_ends.size()) {
    throw_internal("word-index", "word index out of range: " + std::to_string(index));
  }
  const std::size_t begin = index == 0 ? 0 : word_ends[index - 1];
  return {tokens.data() + begin, word_ends[index] - begin};
}

PhonemeString PhonemeString::single_word(std::vector<std::string> word_tokens, Repr repr) {
  PhonemeString ps;
  ps.repr = repr;
  ps.tokens = std::move(word_tokens);
  ps.word_ends = {ps.tokens.size()};
  ps.validate();
  return ps;
}

PhonemeString PhonemeString::from_words(const std::vector<std::vector<std::string>>& words,
                                        Repr repr) {
  PhonemeString ps;
  ps.repr = repr;
  for (const auto& w : words) {
    ps.tokens.insert(ps.tokens.end(), w.begin(), w.end());
    ps.word_ends.push_back(ps.tokens.size());
  }
  ps.validate();
  return ps;
}

namespace {

bool is_ascii_space(char c) { return c == ' ' || c == '\t'; }

std::vector<std::string> split_tokens(std::string_view segment) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < segment.size()) {
    if (is_ascii_space(segment[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < segment.size() && !is_ascii_space(segment[j])) ++j;
    out.emplace_back(segment.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

PhonemeString PhonemeString::parse(std::string_view text, Repr repr) {
  PhonemeString ps;
  ps.repr = repr;

  // Whitespace-only input is the empty phoneme string.
  bool blank = std::all_of(text.begin(), text.end(), [](char c) { return is_ascii_space(c); });
  if (blank) {
    ps.validate();
    return ps;
  }

  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    std::string_view segment =
        bar == std::string_view::npos ? text.substr(start) : text.substr(start, bar - start);
    std::vector<std::string> word_tokens = split_tokens(segment);
    if (word_tokens.empty()) {
      throw_validation("empty-word-group", "empty word group in phoneme string: '" +
                                               std::string(text) + "'");
    }
    ps.tokens.insert(ps.tokens.end(), word_tokens.begin(), word_tokens.end());
    ps.word_ends.push_back(ps.tokens.size());
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  ps.validate();
  return ps;
}

std::string PhonemeString::to_text() const {
  std::string out;
  for (std::size_t w = 0; w < word_count(); ++w) {
    if (w != 0) out += " | ";
    auto group = word(w);
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i != 0) out += ' ';
      out += group[i];
    }
  }
  return out;
}

void PhonemeString::append(const PhonemeString& other) {
  if (repr != other.repr) {
    throw_validation("repr-mismatch", "cannot append phoneme strings of different representations");
  }
  const std::size_t offset = tokens.size();
  tokens.insert(tokens.end(), other.tokens.begin(), other.tokens.end());
  for (std::size_t end : other.word_ends) word_ends.push_back(offset + end);
}

void PhonemeString::validate() const {
  std::size_t prev = 0;
  for (std::size_t end : word_ends) {
    if (end <= prev || end > tokens.size()) {
      throw_validation("word-partition", "word boundaries do not partition the token sequence");
    }
    prev = end;
  }
  if (prev != tokens.size()) {
    throw_validation("word-partition", "word boundaries do not cover all tokens");
  }
  for (const auto& t : tokens) {
    if (t.empty()) throw_validation("empty-token", "empty phoneme token");
    if (t.find_first_of(" \t|") != std::string::npos) {
      throw_validation("bad-token", "phoneme token contains whitespace or '|': '" + t + "'");
    }
  }
  // Marker placement. R1 is marker-free by construction; in R2 a `1` must sit
  // directly after an `e` of the same word group.
  for (std::size_t w = 0; w < word_count(); ++w) {
    auto group = word(w);
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (group[i] != kEzafeMarker) continue;
      if (repr == Repr::R1) {
        throw_validation("marker-in-r1", "Ezafe marker '1' is not a valid R1 token");
      }
      if (i == 0 || group[i - 1] != kEzafeVowel) {
        throw_validation("marker-placement", "Ezafe marker '1' must directly follow an 'e' token");
      }
    }
  }
}

MappingTable MappingTable::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  MappingTable table;
  for (const auto& [r1, r2] : pairs) {
    if (r1.empty() || r2.empty()) {
      throw_validation("empty-symbol", "mapping table symbols must be non-empty");
    }
    if (r1 == kEzafeMarker || r2 == kEzafeMarker) {
      throw_validation("marker-mapped", "the Ezafe marker '1' is structural and cannot be mapped");
    }
    if (!table.r1_to_r2_.emplace(r1, r2).second) {
      throw_validation("duplicate-symbol", "duplicate R1 symbol in mapping table: '" + r1 + "'");
    }
    if (!table.r2_to_r1_.emplace(r2, r1).second) {
      throw_validation("non-injective", "duplicate R2 symbol in mapping table: '" + r2 + "'");
    }
  }
  return table;
}

MappingTable MappingTable::load(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw_validation("malformed-line",
                       "mapping table line " + std::to_string(line_no) + " is not 'r1<TAB>r2'");
    }
    pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return from_pairs(pairs);
}

MappingTable MappingTable::load_file(const std::string& path) {
  auto in = detail::open_input(path);
  return load(in);
}

const std::string* MappingTable::map(const std::string& symbol, Repr from) const {
  const auto& table = from == Repr::R1 ? r1_to_r2_ : r2_to_r1_;
  auto it = table.find(symbol);
  return it == table.end() ? nullptr : &it->second;
}

PhonemeString map_repr(const PhonemeString& ps, const MappingTable& table, Repr target) {
  if (ps.repr == target) {
    throw_validation("same-repr", "phoneme string is already in the target representation");
  }
  PhonemeString out;
  out.repr = target;
  std::size_t token_index = 0;
  for (std::size_t w = 0; w < ps.word_count(); ++w) {
    auto group = ps.word(w);
    std::size_t emitted = 0;
    for (const auto& symbol : group) {
      if (symbol == kEzafeMarker && ps.repr == Repr::R2) {
        // Dropped on the way to R1; R1 sources cannot contain it (validate()).
        ++token_index;
        continue;
      }
      const std::string* mapped = table.map(symbol, ps.repr);
      if (mapped == nullptr) {
        throw_validation("unknown-symbol", "unknown " + std::string(repr_name(ps.repr)) +
                                               " symbol '" + symbol + "' at token position " +
                                               std::to_string(token_index));
      }
      out.tokens.push_back(*mapped);
      ++emitted;
      ++token_index;
    }
    if (emitted == 0) {
      // A group of only markers cannot exist in a valid input.
      throw_internal("empty-mapped-group", "mapping produced an empty word group");
    }
    out.word_ends.push_back(out.tokens.size());
  }
  out.validate();
  return out;
}

PhonemeString annotate_ezafe(const PhonemeString& ps, const EzafeAnnotation& annotation) {
  if (ps.repr != Repr::R2) {
    throw_validation("repr-mismatch", "Ezafe annotation applies to R2 phoneme strings only");
  }
  for (std::size_t index : annotation.word_indices) {
    if (index >= ps.word_count()) {
      throw_validation("word-index", "Ezafe annotation index " + std::to_string(index) +
                                         " out of range for " + std::to_string(ps.word_count()) +
                                         " words");
    }
  }
  PhonemeString out;
  out.repr = Repr::R2;
  for (std::size_t w = 0; w < ps.word_count(); ++w) {
    auto group = ps.word(w);
    out.tokens.insert(out.tokens.end(), group.begin(), group.end());
    if (annotation.word_indices.count(w) > 0) {
      if (group.empty() || group.back() != kEzafeVowel) {
        throw_validation("missing-ezafe-vowel",
                         "annotated word " + std::to_string(w) + " does not end in 'e'");
      }
      out.tokens.push_back(kEzafeMarker);
    }
    out.word_ends.push_back(out.tokens.size());
  }
  out.validate();
  return out;
}

}  // namespace homog2p
