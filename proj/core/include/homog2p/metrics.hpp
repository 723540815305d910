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

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "homog2p/corpus.hpp"
#include "homog2p/engine.hpp"
#include "homog2p/phoneme_repr.hpp"

namespace homog2p {

// Token-level Levenshtein distance with unit insert/delete/substitute costs.
std::size_t phoneme_edit_distance(const PhonemeString& reference,
                                  const PhonemeString& hypothesis);

// Phoneme error rate: token-level Levenshtein distance (unit costs) divided
// by the reference token count. Both empty -> 0; empty reference with a
// non-empty hypothesis divides by 1, i.e. returns the hypothesis length.
// Both strings must be in the same representation.
double per(const PhonemeString& reference, const PhonemeString& hypothesis);

// How PER aggregates over a benchmark: mean of per-sentence PER (default),
// or total edit distance over total reference tokens.
enum class PerMode { per_sentence_average, pooled };

PerMode per_mode_from_name(std::string_view name);

// Fraction of annotated records whose logged engine decision picked the gold
// pronunciation (token-exact). Records and results are matched positionally.
// An annotated record without a decision for its homograph (e.g. the
// homograph was OOV) raises Error(validation, "missing-decision").
double homograph_accuracy(std::span<const CorpusRecord> records,
                          std::span<const PhonemizationResult> results);

// Evaluation protocol: mean +/- population standard deviation across
// independent runs, one warm-up pass excluded from timing.
struct BenchReport {
  double per_mean = 0.0;  // percent
  double per_std = 0.0;
  std::optional<double> homograph_acc_mean;  // percent; absent when the
  std::optional<double> homograph_acc_std;   // benchmark has no annotations
  double latency_mean = 0.0;  // seconds per sentence
  double latency_std = 0.0;
  std::size_t runs = 0;
  std::string system_label;

  nlohmann::json to_json() const;
};

struct BenchOptions {
  std::size_t runs = 5;
  PerMode per_mode = PerMode::per_sentence_average;
  // When false, phonemization is not timed and latency fields stay zero;
  // used where byte-identical reports are required.
  bool measure_latency = true;
  std::string system_label = "homog2p";
};

// Runs the engine `runs` times over the benchmark records (all of which
// need phoneme_r1 references). Latency is wall-clock per sentence, measured
// strictly sequentially.
BenchReport bench(const Engine& engine, std::span<const CorpusRecord> benchmark,
                  const BenchOptions& options = {});

}  // namespace homog2p
