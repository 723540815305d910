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

#include "homog2p/disambiguator.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

#include "homog2p/error.hpp"

namespace homog2p {

const char* decision_basis_name(DecisionBasis b) {
  switch (b) {
    case DecisionBasis::score: return "score";
    case DecisionBasis::prior_fallback: return "prior_fallback";
    case DecisionBasis::tie_break: return "tie_break";
  }
  throw_internal("bad-basis", "unhandled decision basis");
}

ScoreReport score(const ContextDatabase& db, const Token& homograph,
                  std::span<const Token> context, ScoreNormalizer normalizer) {
  const auto* prons = db.find(homograph);
  if (prons == nullptr) {
    throw_validation("homograph-not-in-db",
                     "homograph '" + homograph + "' is not in the context database");
  }
  ScoreReport report;
  report.homograph = homograph;
  report.scores.reserve(prons->size());
  for (const auto& [pron, stats] : *prons) {
    PronunciationScore s;
    s.pronunciation = pron;
    s.order = stats.order;
    s.prior = stats.prior;
    for (const Token& word : context) {
      if (word == homograph) continue;
      auto it = stats.weights.find(word);
      if (it != stats.weights.end()) s.raw_overlap += it->second;
    }
    const std::uint64_t denom = normalizer == ScoreNormalizer::total_weight
                                    ? stats.total_weight
                                    : static_cast<std::uint64_t>(stats.weights.size());
    s.normalized_score =
        denom == 0 ? 0.0 : static_cast<double>(s.raw_overlap) / static_cast<double>(denom);
    report.scores.push_back(std::move(s));
  }
  std::sort(report.scores.begin(), report.scores.end(),
            [](const PronunciationScore& a, const PronunciationScore& b) {
              return a.order < b.order;
            });
  return report;
}

ScoreReport choose(const ContextDatabase& db, const Token& homograph,
                   std::span<const Token> context, ScoreNormalizer normalizer) {
  ScoreReport report = score(db, homograph, context, normalizer);
  if (report.scores.empty()) {
    throw_internal("empty-entry", "context database entry has no pronunciations");
  }

  const bool no_evidence = std::all_of(report.scores.begin(), report.scores.end(),
                                       [](const PronunciationScore& s) {
                                         return s.raw_overlap == 0;
                                       });
  if (no_evidence) {
    // Zero contextual evidence: the training-frequency prior is the best
    // remaining guess. Ties resolve to the first pronunciation in lexicon
    // order; scores are already sorted that way.
    const PronunciationScore* best = &report.scores.front();
    for (const auto& s : report.scores) {
      if (s.prior > best->prior) best = &s;
    }
    report.chosen = best->pronunciation;
    report.basis = DecisionBasis::prior_fallback;
    return report;
  }

  const PronunciationScore* best = &report.scores.front();
  bool tie_broken = false;
  for (std::size_t i = 1; i < report.scores.size(); ++i) {
    const auto& s = report.scores[i];
    if (s.normalized_score > best->normalized_score) {
      best = &s;
      tie_broken = false;
    } else if (s.normalized_score == best->normalized_score) {
      tie_broken = true;
      if (s.prior > best->prior) best = &s;
      // equal prior: keep the earlier lexicon order (current best)
    }
  }
  report.chosen = best->pronunciation;
  report.basis = tie_broken ? DecisionBasis::tie_break : DecisionBasis::score;
  return report;
}

nlohmann::json ScoreReport::to_json() const {
  nlohmann::json scores_json = nlohmann::json::array();
  for (const auto& s : scores) {
    scores_json.push_back({{"pronunciation", s.pronunciation},
                           {"order", s.order},
                           {"raw_overlap", s.raw_overlap},
                           {"normalized_score", s.normalized_score},
                           {"prior", s.prior}});
  }
  nlohmann::json out = {{"homograph", homograph}, {"scores", std::move(scores_json)}};
  if (!chosen.empty()) {
    out["chosen"] = chosen;
    out["basis"] = decision_basis_name(basis);
  }
  return out;
}

}  // namespace homog2p
