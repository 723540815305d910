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
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "homog2p/corpus.hpp"
#include "homog2p/phoneme_repr.hpp"

namespace homog2p {

// word -> replacement candidates with their pronunciations (R1, one word).
//
// File format: TSV `word<TAB>synonym<TAB>synonym_phonemes`, '#' comments.
// A word never maps to itself.
class SynonymMap {
 public:
  struct Entry {
    std::string grapheme;
    PhonemeString pronunciation;  // single word, R1
  };

  static SynonymMap load(std::istream& in);
  static SynonymMap load_file(const std::string& path);

  void add(const std::string& word, Entry entry);
  const std::vector<Entry>* find(const Token& word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<Entry>> entries_;
};

// Inter-word boundaries that must not be split. Boundary i sits between
// words i and i+1; Ezafe links make a boundary forbidden.
struct SplitConstraint {
  std::set<std::size_t> forbidden_boundaries;
};

// Derives the constraint from a record's R2 phonemes: a word group carrying
// an Ezafe marker is linked to the next word, so the boundary after it is
// forbidden. Records without R2 phonemes yield no constraints.
SplitConstraint ezafe_constraint(const CorpusRecord& record);

// Replaces one mapped token occurrence per variant (grapheme token plus its
// aligned phoneme word group), scanning left to right, synonyms in map
// order, at most max_variants outputs. The homograph token is never
// replaced. When the record carries R2 phonemes, a mapping table is needed
// to derive the synonym's R2 group; without one the variant drops R2.
// Occurrences whose R2 group carries an Ezafe marker are skipped.
std::vector<CorpusRecord> synonym_replace(const CorpusRecord& record, const SynonymMap& map,
                                          std::size_t max_variants,
                                          const MappingTable* table = nullptr);

// Splits the sentence at a uniformly chosen allowed boundary and swaps the
// two segments, rotating phoneme word groups identically. Preserves the
// grapheme-token and phoneme-token multisets and the homograph annotation.
CorpusRecord reorder(const CorpusRecord& record, const SplitConstraint& constraint,
                     std::uint64_t rng_seed);

// Appends one uniformly chosen eligible filler (homograph-free, non-empty,
// at most max_filler_words words) to a homograph record.
CorpusRecord concat_homograph(const CorpusRecord& record, std::span<const CorpusRecord> fillers,
                              std::size_t max_filler_words, std::uint64_t rng_seed);

}  // namespace homog2p
