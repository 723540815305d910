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
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>

#include "homog2p/corpus.hpp"
#include "homog2p/lexicon.hpp"
#include "homog2p/text_norm.hpp"

namespace homog2p {

// Per-pronunciation context statistics: how often each content word
// co-occurred with this pronunciation in the training corpus.
struct PronunciationStats {
  std::map<std::string, std::uint64_t> weights;  // context word -> count
  std::uint64_t total_weight = 0;                // sum of weights
  std::uint64_t prior = 0;                       // training sentences with this pronunciation
  std::uint32_t order = 0;                       // position in the lexicon pronunciation list
};

// Maps each homograph pronunciation to the context words that co-occur with
// it. Weights are raw co-occurrence counts over whole sentences after
// stopword removal; the homograph's own surface token never counts as its
// context. Immutable once built; safe for concurrent readers.
class ContextDatabase {
 public:
  using PronunciationMap = std::map<std::string, PronunciationStats>;
  using EntryMap = std::map<std::string, PronunciationMap>;

  struct BuildOptions {
    // Count each distinct context word at most once per sentence instead of
    // once per occurrence. Off by default: one increment per occurrence.
    bool dedupe_context_per_sentence = false;
  };

  ContextDatabase() = default;

  static ContextDatabase build(std::span<const CorpusRecord> records, const StopwordSet& stopwords,
                               const HomographInventory& inventory, BuildOptions options = {});

  // Adds another database built with the same stopword set. Counts are
  // additive, so merging databases built from disjoint corpus halves equals
  // building from the whole.
  void merge(const ContextDatabase& other);

  const PronunciationMap* find(const std::string& homograph) const;
  const EntryMap& entries() const { return entries_; }
  std::size_t homograph_count() const { return entries_.size(); }
  std::uint32_t stopwords_fingerprint() const { return stopwords_fingerprint_; }

  // Binary serialization: versioned header, CRC-32 checksum, sorted-key
  // body; identical databases serialize to identical bytes.
  void save(std::ostream& out) const;
  static ContextDatabase load(std::istream& in);
  void save_file(const std::string& path) const;
  static ContextDatabase load_file(const std::string& path);

  nlohmann::json to_json() const;

 private:
  EntryMap entries_;
  std::uint32_t stopwords_fingerprint_ = 0;
};

}  // namespace homog2p
