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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "homog2p/lexicon.hpp"
#include "homog2p/phoneme_repr.hpp"
#include "homog2p/text_norm.hpp"

namespace homog2p {

enum class Source { human, llm, manatts, commonvoice, gptinformal, augmented, other };

const char* source_name(Source s);
Source source_from_name(std::string_view name);

// One corpus row: a sentence with its phonemization and, for homograph
// samples, the target homograph and its gold pronunciation.
//
// TSV column order (no header, fields may not contain tab or newline;
// empty field = absent optional):
//   grapheme, phoneme_r1, phoneme_r2, homograph, pronunciation, source, id
// JSONL uses the same keys, absent keys for absent optionals.
struct CorpusRecord {
  std::string grapheme;  // normalized sentence
  // Sentence phonemes, word-aligned to the grapheme tokens. Optional so that
  // freshly ingested sentences can exist before the phonemization pass.
  std::optional<PhonemeString> phoneme_r1;
  std::optional<PhonemeString> phoneme_r2;
  std::optional<Token> homograph;
  std::optional<PhonemeString> pronunciation;  // single word, R1
  Source source = Source::other;
  std::string id;

  bool annotated() const { return homograph.has_value(); }

  // Enforces: homograph <=> pronunciation; homograph appears among the
  // grapheme's tokens; phoneme word-group counts equal the token count;
  // representations match the field (R1/R2); grapheme is normalized.
  void validate() const;
};

enum class CorpusFormat { tsv, jsonl };

CorpusFormat corpus_format_from_name(std::string_view name);

// Reads and validates all records; throws Error(validation, ...) with the
// offending line number on the first bad record, Error(validation,
// "malformed-framing") on broken framing.
std::vector<CorpusRecord> read_corpus(std::istream& in, CorpusFormat format);
std::vector<CorpusRecord> read_corpus_file(const std::string& path, CorpusFormat format);

void write_corpus(std::ostream& out, std::span<const CorpusRecord> records, CorpusFormat format);

std::string record_to_tsv(const CorpusRecord& record);

struct CorpusStats {
  std::size_t sentence_count = 0;
  std::size_t unique_word_count = 0;
  std::map<std::size_t, std::size_t> word_count_histogram;
  // homograph -> pronunciation text -> sample count
  std::map<std::string, std::map<std::string, std::size_t>> homograph_counts;
  std::map<Source, std::size_t> source_counts;
};

// Exact counts over the records. When an inventory is supplied, every
// inventory pronunciation is seeded with a zero count so that unobserved
// variants are visible to balance_report.
CorpusStats corpus_stats(std::span<const CorpusRecord> records,
                         const HomographInventory* inventory = nullptr);

struct BalanceEntry {
  std::size_t max_count = 0;
  std::size_t min_count = 0;
  double ratio = 1.0;  // +inf sentinel when any pronunciation has zero samples
  bool unbalanced = false;
};

// Per-homograph max/min pronunciation-count ratio.
std::map<std::string, BalanceEntry> balance_report(const CorpusStats& stats);

}  // namespace homog2p
