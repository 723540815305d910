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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homog2p/context_db.hpp"
#include "homog2p/disambiguator.hpp"
#include "homog2p/lexicon.hpp"
#include "homog2p/phoneme_repr.hpp"
#include "homog2p/text_norm.hpp"

namespace homog2p {

// Out-of-vocabulary handling. passthrough_marked emits the grapheme wrapped
// in ⟨⟩ as a single pseudo-token, keeping OOV visible (and penalized) in
// error metrics. letter_table maps the word character by character.
enum class OovPolicy { passthrough_marked, letter_table };

OovPolicy oov_policy_from_name(std::string_view name);

struct EngineConfig {
  OovPolicy oov_policy = OovPolicy::passthrough_marked;
  // UTF-8 character -> phoneme tokens; required iff oov_policy == letter_table.
  std::map<std::string, std::vector<std::string>> letter_table;
  bool use_disambiguator = true;
  StopwordSet stopwords;
  ScoreNormalizer normalizer = ScoreNormalizer::total_weight;
};

struct HomographDecision {
  std::size_t word_index = 0;
  std::string homograph;
  ScoreReport report;
};

struct PhonemizationResult {
  PhonemeString phonemes;  // R1; one word group per input token
  std::vector<HomographDecision> decisions;
  std::vector<std::size_t> oov_words;  // indices of OOV tokens
};

// Sentence phonemizer: lexicon lookup per token, statistical homograph
// resolution over the sentence's content words, configurable OOV fallback.
// All state is immutable after construction; phonemize() is reentrant.
class Engine {
 public:
  // With a context database; required when cfg.use_disambiguator. The
  // database must carry the same stopword fingerprint as cfg.stopwords.
  Engine(Lexicon lexicon, HomographInventory inventory, ContextDatabase db, EngineConfig cfg);

  // Disambiguator-off engine: inventory homographs take their first lexicon
  // pronunciation and no database is consulted.
  Engine(Lexicon lexicon, HomographInventory inventory, EngineConfig cfg);

  PhonemizationResult phonemize(std::string_view sentence) const;

  struct BatchItem {
    std::optional<PhonemizationResult> result;
    std::string error_reason;   // empty on success
    std::string error_message;  // empty on success
    bool ok() const { return result.has_value(); }
  };

  // Element-wise identical to mapping phonemize() over the inputs; a failing
  // sentence yields a positional error without aborting the batch.
  std::vector<BatchItem> phonemize_batch(std::span<const std::string> sentences) const;

  const Lexicon& lexicon() const { return lexicon_; }
  const HomographInventory& inventory() const { return inventory_; }
  const EngineConfig& config() const { return config_; }
  bool has_db() const { return db_.has_value(); }
  const ContextDatabase& db() const;

 private:
  void check_config() const;
  std::vector<std::string> oov_word(const Token& token) const;

  Lexicon lexicon_;
  HomographInventory inventory_;
  std::optional<ContextDatabase> db_;
  EngineConfig config_;
};

}  // namespace homog2p
