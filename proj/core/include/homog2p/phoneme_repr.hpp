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

#include <cstddef>
#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homog2p {

// Two phoneme representations are supported. R1 is the dictionary-style
// representation and carries no Ezafe marker; R2 marks Ezafe with a `1`
// token directly after the linking `e`. The symbol inventories themselves
// are configuration (see MappingTable), not hardcoded.
enum class Repr { R1, R2 };

const char* repr_name(Repr r);
Repr repr_from_name(std::string_view name);

// Structural marker in R2; never part of a mapping table.
inline constexpr const char* kEzafeMarker = "1";
// Token that must precede every Ezafe marker.
inline constexpr const char* kEzafeVowel = "e";

// A tagged sequence of phoneme tokens, word-aligned to graphemes.
//
// Text form (bit-exact): tokens joined by single spaces, word groups joined
// by " | ", e.g. "g o l | e 1 | m A h". Tokens may not contain whitespace
// or '|'. The empty string denotes the empty phoneme string.
struct PhonemeString {
  std::vector<std::string> tokens;
  // End offsets of each word group; strictly increasing, back() == tokens.size().
  // No empty groups: every word carries at least one token.
  std::vector<std::size_t> word_ends;
  Repr repr = Repr::R1;

  std::size_t word_count() const { return word_ends.size(); }
  std::size_t token_count() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  std::span<const std::string> word(std::size_t index) const;

  static PhonemeString single_word(std::vector<std::string> word_tokens, Repr repr);
  static PhonemeString from_words(const std::vector<std::vector<std::string>>& words, Repr repr);

  static PhonemeString parse(std::string_view text, Repr repr);
  std::string to_text() const;

  // Appends the groups of `other` (same repr required).
  void append(const PhonemeString& other);

  // Checks structural invariants: non-empty tokens without whitespace/'|',
  // valid word partition, R1 marker-free, and in R2 every `1` directly after
  // an `e` of the same word group.
  void validate() const;

  bool operator==(const PhonemeString&) const = default;
};

// Bijective symbol map between the two representations, loaded from a TSV
// config file: `r1_symbol<TAB>r2_symbol`, '#' comments allowed. The Ezafe
// marker `1` is structural and may not appear as a symbol.
class MappingTable {
 public:
  static MappingTable load(std::istream& in);
  static MappingTable load_file(const std::string& path);
  static MappingTable from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

  const std::string* map(const std::string& symbol, Repr from) const;
  const std::map<std::string, std::string>& forward() const { return r1_to_r2_; }
  std::size_t size() const { return r1_to_r2_.size(); }

 private:
  std::map<std::string, std::string> r1_to_r2_;
  std::map<std::string, std::string> r2_to_r1_;
};

// Word positions carrying Ezafe within one sentence.
struct EzafeAnnotation {
  std::set<std::size_t> word_indices;
};

// Symbol-by-symbol representation change. Word boundaries are preserved;
// R2 -> R1 drops Ezafe markers; R1 -> R2 emits none (insertion is a separate
// concern, see annotate_ezafe). Unknown symbols raise
// Error(validation, "unknown-symbol") naming the symbol and token position.
PhonemeString map_repr(const PhonemeString& ps, const MappingTable& table, Repr target);

// Inserts a `1` marker after the final `e` of every annotated word group of
// an R2 phoneme string. A word whose group does not end in `e` raises
// Error(validation, "missing-ezafe-vowel") identifying the word index.
PhonemeString annotate_ezafe(const PhonemeString& ps, const EzafeAnnotation& annotation);

}  // namespace homog2p
