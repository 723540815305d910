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

#include "homog2p/augment.hpp"

#include <algorithm>

#include "file_io.hpp"
#include "homog2p/error.hpp"
#include "rng.hpp"

namespace homog2p {

void SynonymMap::add(const std::string& word, Entry entry) {
  if (word == entry.grapheme) {
    throw_validation("self-synonym", "word maps to itself in the synonym map: '" + word + "'");
  }
  if (entry.pronunciation.empty()) {
    throw_validation("empty-synonym-pron", "synonym pronunciation is empty for '" + word + "'");
  }
  entries_[word].push_back(std::move(entry));
}

const std::vector<SynonymMap::Entry>* SynonymMap::find(const Token& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

SynonymMap SynonymMap::load(std::istream& in) {
  SynonymMap map;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw_validation("malformed-line", "synonym map line " + std::to_string(line_no) +
                                             " needs 'word<TAB>synonym<TAB>phonemes'");
    }
    std::string word = normalize(line.substr(0, t1));
    std::string synonym = normalize(line.substr(t1 + 1, t2 - t1 - 1));
    std::string phonemes = line.substr(t2 + 1);
    auto word_tokens = tokenize(synonym);
    if (word.empty() || synonym.empty() || word_tokens.size() != 1 || word_tokens[0] != synonym) {
      throw_validation("malformed-line", "synonym map line " + std::to_string(line_no) +
                                             " must map single tokens");
    }
    PhonemeString pron = PhonemeString::parse(phonemes, Repr::R1);
    if (pron.word_count() != 1) {
      throw_validation("malformed-line", "synonym pronunciation at line " +
                                             std::to_string(line_no) + " must be a single word");
    }
    map.add(word, {synonym, std::move(pron)});
  }
  return map;
}

SynonymMap SynonymMap::load_file(const std::string& path) {
  auto in = detail::open_input(path);
  return load(in);
}

namespace {

bool group_has_marker(const PhonemeString& ps, std::size_t word_index) {
  auto group = ps.word(word_index);
  return std::find(group.begin(), group.end(), std::string(kEzafeMarker)) != group.end();
}

PhonemeString replace_group(const PhonemeString& ps, std::size_t word_index,
                            std::span<const std::string> replacement) {
  std::vector<std::vector<std::string>> words;
  words.reserve(ps.word_count());
  for (std::size_t w = 0; w < ps.word_count(); ++w) {
    auto group = ps.word(w);
    if (w == word_index) {
      words.emplace_back(replacement.begin(), replacement.end());
    } else {
      words.emplace_back(group.begin(), group.end());
    }
  }
  return PhonemeString::from_words(words, ps.repr);
}

PhonemeString rotate_groups(const PhonemeString& ps, std::size_t boundary) {
  std::vector<std::vector<std::string>> words;
  words.reserve(ps.word_count());
  for (std::size_t w = boundary + 1; w < ps.word_count(); ++w) {
    auto group = ps.word(w);
    words.emplace_back(group.begin(), group.end());
  }
  for (std::size_t w = 0; w <= boundary; ++w) {
    auto group = ps.word(w);
    words.emplace_back(group.begin(), group.end());
  }
  return PhonemeString::from_words(words, ps.repr);
}

std::string join_tokens(std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i != 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

SplitConstraint ezafe_constraint(const CorpusRecord& record) {
  SplitConstraint constraint;
  if (!record.phoneme_r2) return constraint;
  const auto& r2 = *record.phoneme_r2;
  for (std::size_t w = 0; w + 1 < r2.word_count(); ++w) {
    if (group_has_marker(r2, w)) constraint.forbidden_boundaries.insert(w);
  }
  return constraint;
}

std::vector<CorpusRecord> synonym_replace(const CorpusRecord& record, const SynonymMap& map,
                                          std::size_t max_variants, const MappingTable* table) {
  record.validate();
  if (!record.phoneme_r1) {
    throw_validation("missing-alignment",
                     "synonym replacement needs word-aligned phonemes (id '" + record.id + "')");
  }
  std::vector<TokenSpan> spans = tokenize_spans(record.grapheme);

  std::vector<CorpusRecord> variants;
  for (std::size_t i = 0; i < spans.size() && variants.size() < max_variants; ++i) {
    const Token& token = spans[i].text;
    if (record.homograph && token == *record.homograph) continue;
    const auto* entries = map.find(token);
    if (entries == nullptr) continue;
    // An Ezafe-linked word cannot be swapped without re-deriving the liaison.
    if (record.phoneme_r2 && group_has_marker(*record.phoneme_r2, i)) continue;

    for (const auto& entry : *entries) {
      if (variants.size() >= max_variants) break;
      CorpusRecord variant = record;
      variant.grapheme = record.grapheme.substr(0, spans[i].begin) + entry.grapheme +
                         record.grapheme.substr(spans[i].end);
      variant.phoneme_r1 = replace_group(*record.phoneme_r1, i, entry.pronunciation.tokens);
      if (record.phoneme_r2) {
        if (table != nullptr) {
          PhonemeString r2_word = map_repr(entry.pronunciation, *table, Repr::R2);
          variant.phoneme_r2 = replace_group(*record.phoneme_r2, i, r2_word.tokens);
        } else {
          variant.phoneme_r2.reset();
        }
      }
      variant.source = Source::augmented;
      variant.id = record.id + "-syn" + std::to_string(variants.size());
      variant.validate();
      variants.push_back(std::move(variant));
    }
  }
  return variants;
}

CorpusRecord reorder(const CorpusRecord& record, const SplitConstraint& constraint,
                     std::uint64_t rng_seed) {
  record.validate();
  std::vector<Token> words = tokenize(record.grapheme);
  if (words.size() < 2) {
    throw_validation("too-few-words",
                     "reordering needs at least two words (id '" + record.id + "')");
  }
  for (std::size_t b : constraint.forbidden_boundaries) {
    if (b + 1 >= words.size()) {
      throw_validation("bad-boundary-index",
                       "forbidden boundary " + std::to_string(b) + " out of range");
    }
  }
  std::vector<std::size_t> allowed;
  for (std::size_t b = 0; b + 1 < words.size(); ++b) {
    if (constraint.forbidden_boundaries.count(b) == 0) allowed.push_back(b);
  }
  if (allowed.empty()) {
    throw_validation("no-allowed-boundary",
                     "every split point is Ezafe-linked (id '" + record.id + "')");
  }
  std::mt19937_64 gen(rng_seed);
  const std::size_t boundary = allowed[detail::uniform_index(gen, allowed.size())];

  std::vector<Token> rotated(words.begin() + static_cast<std::ptrdiff_t>(boundary) + 1,
                             words.end());
  rotated.insert(rotated.end(), words.begin(),
                 words.begin() + static_cast<std::ptrdiff_t>(boundary) + 1);

  CorpusRecord out = record;
  out.grapheme = join_tokens(rotated);
  if (record.phoneme_r1) out.phoneme_r1 = rotate_groups(*record.phoneme_r1, boundary);
  if (record.phoneme_r2) out.phoneme_r2 = rotate_groups(*record.phoneme_r2, boundary);
  out.source = Source::augmented;
  out.id = record.id + "-reord";
  out.validate();
  return out;
}

CorpusRecord concat_homograph(const CorpusRecord& record, std::span<const CorpusRecord> fillers,
                              std::size_t max_filler_words, std::uint64_t rng_seed) {
  record.validate();
  if (!record.homograph) {
    throw_validation("missing-annotation",
                     "concatenation augments annotated records only (id '" + record.id + "')");
  }
  std::vector<const CorpusRecord*> pool;
  for (const auto& filler : fillers) {
    if (filler.annotated()) {
      throw_validation("filler-has-homograph",
                       "filler sentences must be homograph-free (id '" + filler.id + "')");
    }
    const std::size_t words = tokenize(filler.grapheme).size();
    if (words == 0 || words > max_filler_words) continue;
    pool.push_back(&filler);
  }
  if (pool.empty()) {
    throw_validation("empty-fillers", "no eligible filler sentences");
  }
  std::mt19937_64 gen(rng_seed);
  const CorpusRecord& filler = *pool[detail::uniform_index(gen, pool.size())];
  filler.validate();

  CorpusRecord out = record;
  out.grapheme = record.grapheme + " " + filler.grapheme;
  if (record.phoneme_r1 && filler.phoneme_r1) {
    out.phoneme_r1->append(*filler.phoneme_r1);
  } else {
    out.phoneme_r1.reset();
  }
  if (record.phoneme_r2 && filler.phoneme_r2) {
    out.phoneme_r2->append(*filler.phoneme_r2);
  } else {
    out.phoneme_r2.reset();
  }
  out.source = Source::augmented;
  out.id = record.id + "-cat";
  out.validate();
  return out;
}

}  // namespace homog2p
