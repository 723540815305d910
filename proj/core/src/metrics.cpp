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

#include "homog2p/metrics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <vector>

#include "homog2p/error.hpp"

namespace homog2p {

namespace {

std::size_t levenshtein(std::span<const std::string> a, std::span<const std::string> b) {
  // Two-row dynamic program over token sequences.
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> curr(b.size() + 1);
  std::iota(prev.begin(), prev.end(), static_cast<std::size_t>(0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t substitution = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, substitution});
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// Population standard deviation, matching "std across N runs".
double std_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(xs.size()));
}

}  // namespace

double per(const PhonemeString& reference, const PhonemeString& hypothesis) {
  if (reference.repr != hypothesis.repr) {
    throw_validation("repr-mismatch",
                     "PER requires both phoneme strings in the same representation");
  }
  if (reference.empty() && hypothesis.empty()) return 0.0;
  const std::size_t distance = levenshtein(reference.tokens, hypothesis.tokens);
  const std::size_t denom = std::max<std::size_t>(reference.token_count(), 1);
  return static_cast<double>(distance) / static_cast<double>(denom);
}

PerMode per_mode_from_name(std::string_view name) {
  if (name == "sentence" || name == "per_sentence_average") return PerMode::per_sentence_average;
  if (name == "pooled") return PerMode::pooled;
  throw_validation("unknown-per-mode", "unknown PER mode: '" + std::string(name) + "'");
}

double homograph_accuracy(std::span<const CorpusRecord> records,
                          std::span<const PhonemizationResult> results) {
  if (records.size() != results.size()) {
    throw_validation("length-mismatch", "records and results must pair positionally");
  }
  std::size_t annotated = 0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (!rec.homograph) continue;
    ++annotated;
    const HomographDecision* decision = nullptr;
    for (const auto& d : results[i].decisions) {
      if (d.homograph == *rec.homograph) {
        decision = &d;
        break;
      }
    }
    if (decision == nullptr) {
      throw_validation("missing-decision", "no engine decision for homograph '" +
                                               *rec.homograph + "' (id '" + rec.id + "')");
    }
    if (decision->report.chosen == rec.pronunciation->to_text()) ++correct;
  }
  if (annotated == 0) {
    throw_validation("no-annotated-records", "benchmark has no homograph annotations");
  }
  return static_cast<double>(correct) / static_cast<double>(annotated);
}

BenchReport bench(const Engine& engine, std::span<const CorpusRecord> benchmark,
                  const BenchOptions& options) {
  if (benchmark.empty()) {
    throw_validation("empty-benchmark", "benchmark has no records");
  }
  if (options.runs < 1) {
    throw_validation("bad-runs", "at least one run is required");
  }
  bool any_annotated = false;
  for (const auto& rec : benchmark) {
    if (!rec.phoneme_r1) {
      throw_validation("missing-phonemes",
                       "benchmark record lacks reference phonemes (id '" + rec.id + "')");
    }
    any_annotated = any_annotated || rec.annotated();
  }

  // Warm-up pass, excluded from every metric's timing.
  for (const auto& rec : benchmark) (void)engine.phonemize(rec.grapheme);

  using clock = std::chrono::steady_clock;
  std::vector<double> per_runs;
  std::vector<double> acc_runs;
  std::vector<double> latency_runs;

  for (std::size_t run = 0; run < options.runs; ++run) {
    std::vector<PhonemizationResult> results;
    results.reserve(benchmark.size());
    double seconds = 0.0;
    for (const auto& rec : benchmark) {
      if (options.measure_latency) {
        const auto t0 = clock::now();
        results.push_back(engine.phonemize(rec.grapheme));
        const auto t1 = clock::now();
        seconds += std::chrono::duration<double>(t1 - t0).count();
      } else {
        results.push_back(engine.phonemize(rec.grapheme));
      }
    }

    if (options.per_mode == PerMode::per_sentence_average) {
      double sum = 0.0;
      for (std::size_t i = 0; i < benchmark.size(); ++i) {
        sum += per(*benchmark[i].phoneme_r1, results[i].phonemes);
      }
      per_runs.push_back(sum / static_cast<double>(benchmark.size()));
    } else {
      std::size_t distance_total = 0;
      std::size_t token_total = 0;
      for (std::size_t i = 0; i < benchmark.size(); ++i) {
        const auto& ref = *benchmark[i].phoneme_r1;
        const double fraction = per(ref, results[i].phonemes);
        const std::size_t denom = std::max<std::size_t>(ref.token_count(), 1);
        distance_total += static_cast<std::size_t>(std::llround(fraction * denom));
        token_total += denom;
      }
      per_runs.push_back(static_cast<double>(distance_total) /
                         static_cast<double>(std::max<std::size_t>(token_total, 1)));
    }
    if (any_annotated) {
      acc_runs.push_back(homograph_accuracy(benchmark, results));
    }
    latency_runs.push_back(seconds / static_cast<double>(benchmark.size()));
  }

  BenchReport report;
  report.runs = options.runs;
  report.system_label = options.system_label;
  report.per_mean = 100.0 * mean_of(per_runs);
  report.per_std = 100.0 * std_of(per_runs);
  if (any_annotated) {
    report.homograph_acc_mean = 100.0 * mean_of(acc_runs);
    report.homograph_acc_std = 100.0 * std_of(acc_runs);
  }
  if (options.measure_latency) {
    report.latency_mean = mean_of(latency_runs);
    report.latency_std = std_of(latency_runs);
  }
  return report;
}

nlohmann::json BenchReport::to_json() const {
  nlohmann::json out = {{"system", system_label},
                        {"runs", runs},
                        {"per_percent", {{"mean", per_mean}, {"std", per_std}}},
                        {"latency_seconds", {{"mean", latency_mean}, {"std", latency_std}}}};
  if (homograph_acc_mean) {
    out["homograph_accuracy_percent"] = {{"mean", *homograph_acc_mean},
                                         {"std", *homograph_acc_std}};
  } else {
    out["homograph_accuracy_percent"] = nullptr;
  }
  return out;
}

}  // namespace homog2p
