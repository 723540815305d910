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

#include "homog2p/engine.hpp"

#include "homog2p/error.hpp"
#include "unicode.hpp"

namespace homog2p {

OovPolicy oov_policy_from_name(std::string_view name) {
  if (name == "passthrough_marked" || name == "marked") return OovPolicy::passthrough_marked;
  if (name == "letter_table" || name == "letters") return OovPolicy::letter_table;
  throw_validation("unknown-oov-policy", "unknown OOV policy: '" + std::string(name) + "'");
}

Engine::Engine(Lexicon lexicon, HomographInventory inventory, ContextDatabase db, EngineConfig cfg)
    : lexicon_(std::move(lexicon)),
      inventory_(std::move(inventory)),
      db_(std::move(db)),
      config_(std::move(cfg)) {
  check_config();
  if (config_.use_disambiguator &&
      db_->stopwords_fingerprint() != config_.stopwords.fingerprint()) {
    throw_validation("fingerprint-mismatch",
                     "context database was built with a different stopword set");
  }
}

Engine::Engine(Lexicon lexicon, HomographInventory inventory, EngineConfig cfg)
    : lexicon_(std::move(lexicon)), inventory_(std::move(inventory)), config_(std::move(cfg)) {
  if (config_.use_disambiguator) {
    throw_validation("config-invariant",
                     "use_disambiguator requires a context database");
  }
  check_config();
}

void Engine::check_config() const {
  if (config_.oov_policy == OovPolicy::letter_table && config_.letter_table.empty()) {
    throw_validation("config-invariant", "letter_table OOV policy needs a non-empty letter table");
  }
  if (config_.oov_policy != OovPolicy::letter_table && !config_.letter_table.empty()) {
    throw_validation("config-invariant",
                     "letter_table is set but the OOV policy does not use it");
  }
}

const ContextDatabase& Engine::db() const {
  if (!db_) throw_internal("no-db", "engine was constructed without a context database");
  return *db_;
}

std::vector<std::string> Engine::oov_word(const Token& token) const {
  // '|' delimits word groups in the serialized phoneme format, so it cannot
  // ride through inside an OOV pseudo-token.
  if (token.find('|') != std::string::npos) {
    throw_validation("unserializable-token",
                     "OOV token contains '|' and cannot be represented: '" + token + "'");
  }
  if (config_.oov_policy == OovPolicy::passthrough_marked) {
    return {"⟨" + token + "⟩"};
  }
  // letter_table: character-wise mapping; characters without an entry pass
  // through marked so the gap stays visible.
  std::vector<std::string> out;
  for (char32_t cp : uni::decode_utf8(token)) {
    std::string ch = uni::encode_utf8(std::u32string(1, cp));
    auto it = config_.letter_table.find(ch);
    if (it == config_.letter_table.end()) {
      out.push_back("⟨" + ch + "⟩");
    } else {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
  }
  return out;
}

PhonemizationResult Engine::phonemize(std::string_view sentence) const {
  PhonemizationResult result;
  result.phonemes.repr = Repr::R1;

  const std::string normalized = normalize(sentence);
  const std::vector<Token> tokens = tokenize(normalized);

  // Homograph resolution consumes the whole sentence's content words; built
  // lazily since unambiguous sentences never need it.
  std::vector<Token> context;
  bool context_ready = false;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& token = tokens[i];
    std::span<const PhonemeString> prons = lexicon_.lookup(token);
    const std::vector<PhonemeString>* inventory_prons = inventory_.find(token);

    if (inventory_prons != nullptr && config_.use_disambiguator &&
        db_->find(token) != nullptr) {
      if (!context_ready) {
        context = content_words(tokens, config_.stopwords);
        context_ready = true;
      }
      ScoreReport report = choose(*db_, token, context, config_.normalizer);
      const PhonemeString* chosen = nullptr;
      for (const auto& pron : *inventory_prons) {
        if (pron.to_text() == report.chosen) {
          chosen = &pron;
          break;
        }
      }
      if (chosen == nullptr) {
        throw_validation("pronunciation-not-in-inventory",
                         "database pronunciation '" + report.chosen +
                             "' is missing from the inventory entry for '" + token + "'");
      }
      result.phonemes.tokens.insert(result.phonemes.tokens.end(), chosen->tokens.begin(),
                                    chosen->tokens.end());
      result.phonemes.word_ends.push_back(result.phonemes.tokens.size());
      result.decisions.push_back({i, token, std::move(report)});
      continue;
    }

    if (inventory_prons != nullptr) {
      // Disambiguator off, or the homograph was never trained: first lexicon
      // pronunciation, no decision logged.
      const PhonemeString& first = inventory_prons->front();
      result.phonemes.tokens.insert(result.phonemes.tokens.end(), first.tokens.begin(),
                                    first.tokens.end());
      result.phonemes.word_ends.push_back(result.phonemes.tokens.size());
      continue;
    }

    if (!prons.empty()) {
      const PhonemeString& first = prons.front();
      result.phonemes.tokens.insert(result.phonemes.tokens.end(), first.tokens.begin(),
                                    first.tokens.end());
      result.phonemes.word_ends.push_back(result.phonemes.tokens.size());
      continue;
    }

    std::vector<std::string> group = oov_word(token);
    result.phonemes.tokens.insert(result.phonemes.tokens.end(), group.begin(), group.end());
    result.phonemes.word_ends.push_back(result.phonemes.tokens.size());
    result.oov_words.push_back(i);
  }
  return result;
}

std::vector<Engine::BatchItem> Engine::phonemize_batch(
    std::span<const std::string> sentences) const {
  std::vector<BatchItem> out;
  out.reserve(sentences.size());
  for (const auto& sentence : sentences) {
    BatchItem item;
    try {
      item.result = phonemize(sentence);
    } catch (const Error& e) {
      item.error_reason = e.reason();
      item.error_message = e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace homog2p
