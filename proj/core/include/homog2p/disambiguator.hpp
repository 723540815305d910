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

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homog2p/context_db.hpp"
#include "homog2p/text_norm.hpp"

namespace homog2p {

enum class DecisionBasis { score, prior_fallback, tie_break };

const char* decision_basis_name(DecisionBasis b);

// How raw overlap is normalized. total_weight (the sum of context counts) is
// the default; distinct_keys divides by the number of distinct context words
// instead and exists for experimentation.
enum class ScoreNormalizer { total_weight, distinct_keys };

struct PronunciationScore {
  std::string pronunciation;
  std::uint32_t order = 0;        // lexicon pronunciation order
  std::uint64_t raw_overlap = 0;  // sum of matched weights, with multiplicity
  double normalized_score = 0.0;  // raw_overlap / normalizer (0 when empty)
  std::uint64_t prior = 0;
};

struct ScoreReport {
  std::string homograph;
  std::vector<PronunciationScore> scores;  // in lexicon pronunciation order
  std::string chosen;                      // empty until choose() ran
  DecisionBasis basis = DecisionBasis::score;

  nlohmann::json to_json() const;
};

// Scores every stored pronunciation of `homograph` against the context
// tokens: raw overlap sums the pronunciation's weight of each context token
// (tokens equal to the homograph are skipped), normalized by the
// pronunciation's total context mass. Context multiplicity counts, mirroring
// the counting rule used at build time. Throws
// Error(validation, "homograph-not-in-db") for unknown homographs.
ScoreReport score(const ContextDatabase& db, const Token& homograph,
                  std::span<const Token> context,
                  ScoreNormalizer normalizer = ScoreNormalizer::total_weight);

// score() plus selection: highest normalized score wins; zero contextual
// evidence falls back to the highest prior; exact ties break by prior, then
// by lexicon pronunciation order. Deterministic for fixed inputs.
ScoreReport choose(const ContextDatabase& db, const Token& homograph,
                   std::span<const Token> context,
                   ScoreNormalizer normalizer = ScoreNormalizer::total_weight);

}  // namespace homog2p
