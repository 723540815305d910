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

#include <istream>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "homog2p/phoneme_repr.hpp"
#include "homog2p/text_norm.hpp"

namespace homog2p {

enum class LexiconFormat { tsv, jsonl };

// Grapheme word -> ordered pronunciation list.
//
// File formats:
//   TSV:   word<TAB>pron1<TAB>pron2...   (pron = space-separated tokens)
//   JSONL: {"word": "...", "pronunciations": ["k e t A b", ...], "repr": "R1"?}
//
// Words are normalized on load; duplicate (word, pronunciation) pairs
// collapse; pronunciation order is file order and serves as the final
// tie-break key downstream.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon load(std::istream& in, LexiconFormat format, Repr repr = Repr::R1);
  static Lexicon load_file(const std::string& path, LexiconFormat format, Repr repr = Repr::R1);

  // Empty span means out of vocabulary.
  std::span<const PhonemeString> lookup(const Token& word) const;

  bool contains(const Token& word) const { return entries_.count(word) > 0; }
  std::size_t size() const { return words_.size(); }
  Repr repr() const { return repr_; }

  // Words in file order of first appearance.
  const std::vector<std::string>& words() const { return words_; }

  void add(const std::string& word, PhonemeString pronunciation);

 private:
  std::unordered_map<std::string, std::vector<PhonemeString>> entries_;
  std::vector<std::string> words_;
  Repr repr_ = Repr::R1;
};

// The subset of a lexicon with >=2 distinct pronunciations, minus the
// manually curated exclusions.
class HomographInventory {
 public:
  HomographInventory() = default;

  const std::vector<PhonemeString>* find(const std::string& word) const;
  bool contains(const std::string& word) const { return items_.count(word) > 0; }
  std::size_t size() const { return items_.size(); }

  // Deterministic (sorted by word).
  const std::map<std::string, std::vector<PhonemeString>>& items() const { return items_; }
  const std::set<std::string>& exclusions() const { return exclusions_; }

  // Pronunciation-count histogram, e.g. {2: 257, 3: 21, 4: 7} at HomoRich scale.
  std::map<std::size_t, std::size_t> pronunciation_histogram() const;

  void add(const std::string& word, std::vector<PhonemeString> pronunciations);
  void set_exclusions(std::set<std::string> exclusions) { exclusions_ = std::move(exclusions); }

 private:
  std::map<std::string, std::vector<PhonemeString>> items_;
  std::set<std::string> exclusions_;
};

// Filters the lexicon for words with multiple valid pronunciations. The
// exclusions set models the manual curation pass that drops words whose
// variants need no disambiguation or are archaic.
HomographInventory extract_homographs(const Lexicon& lexicon, const StopwordSet& exclusions);

}  // namespace homog2p
