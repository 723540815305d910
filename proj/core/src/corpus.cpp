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

#include "homog2p/corpus.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <set>

#include "file_io.hpp"
#include "homog2p/error.hpp"

namespace homog2p {

const char* source_name(Source s) {
  switch (s) {
    case Source::human: return "human";
    case Source::llm: return "llm";
    case Source::manatts: return "manatts";
    case Source::commonvoice: return "commonvoice";
    case Source::gptinformal: return "gptinformal";
    case Source::augmented: return "augmented";
    case Source::other: return "other";
  }
  throw_internal("bad-source", "unhandled source enum value");
}

Source source_from_name(std::string_view name) {
  static const std::map<std::string_view, Source> kNames = {
      {"human", Source::human},           {"llm", Source::llm},
      {"manatts", Source::manatts},       {"commonvoice", Source::commonvoice},
      {"gptinformal", Source::gptinformal}, {"augmented", Source::augmented},
      {"other", Source::other}};
  auto it = kNames.find(name);
  if (it == kNames.end()) {
    throw_validation("unknown-source", "unknown corpus source: '" + std::string(name) + "'");
  }
  return it->second;
}

CorpusFormat corpus_format_from_name(std::string_view name) {
  if (name == "tsv") return CorpusFormat::tsv;
  if (name == "jsonl") return CorpusFormat::jsonl;
  throw_validation("unknown-format", "unknown corpus format: '" + std::string(name) + "'");
}

void CorpusRecord::validate() const {
  if (homograph.has_value() != pronunciation.has_value()) {
    throw_validation("annotation-pair",
                     "homograph and pronunciation must be present together (id '" + id + "')");
  }
  if (!is_normalized(grapheme)) {
    throw_validation("unnormalized-grapheme", "grapheme is not normalized (id '" + id + "')");
  }
  std::vector<Token> tokens = tokenize(grapheme);
  if (homograph) {
    if (std::find(tokens.begin(), tokens.end(), *homograph) == tokens.end()) {
      throw_validation("homograph-missing",
                       "homograph '" + *homograph + "' is not a token of the sentence (id '" +
                           id + "')");
    }
  }
  if (phoneme_r1) {
    phoneme_r1->validate();
    if (phoneme_r1->repr != Repr::R1) {
      throw_validation("repr-mismatch", "phoneme_r1 is not tagged R1 (id '" + id + "')");
    }
    if (phoneme_r1->word_count() != tokens.size()) {
      throw_validation("alignment", "phoneme_r1 has " + std::to_string(phoneme_r1->word_count()) +
                                        " word groups for " + std::to_string(tokens.size()) +
                                        " tokens (id '" + id + "')");
    }
  }
  if (phoneme_r2) {
    phoneme_r2->validate();
    if (phoneme_r2->repr != Repr::R2) {
      throw_validation("repr-mismatch", "phoneme_r2 is not tagged R2 (id '" + id + "')");
    }
    if (phoneme_r2->word_count() != tokens.size()) {
      throw_validation("alignment", "phoneme_r2 word groups do not align with tokens (id '" +
                                        id + "')");
    }
  }
  if (pronunciation) {
    pronunciation->validate();
    if (pronunciation->word_count() != 1) {
      throw_validation("pronunciation-shape",
                       "homograph pronunciation must be a single word (id '" + id + "')");
    }
  }
}

namespace {

constexpr std::size_t kTsvColumns = 7;

std::vector<std::string> split_on_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

void check_field_clean(const std::string& value, const char* field) {
  if (value.find('\t') != std::string::npos || value.find('\n') != std::string::npos) {
    throw_validation("field-escaping",
                     std::string(field) + " contains a tab or newline; TSV fields are not escaped");
  }
}

CorpusRecord record_from_tsv(const std::string& line, std::size_t line_no) {
  auto fields = split_on_tabs(line);
  if (fields.size() != kTsvColumns) {
    throw_validation("malformed-framing", "corpus line " + std::to_string(line_no) + " has " +
                                              std::to_string(fields.size()) +
                                              " fields, expected 7");
  }
  CorpusRecord rec;
  rec.grapheme = fields[0];
  if (!fields[1].empty()) rec.phoneme_r1 = PhonemeString::parse(fields[1], Repr::R1);
  if (!fields[2].empty()) rec.phoneme_r2 = PhonemeString::parse(fields[2], Repr::R2);
  if (!fields[3].empty()) rec.homograph = fields[3];
  if (!fields[4].empty()) rec.pronunciation = PhonemeString::parse(fields[4], Repr::R1);
  rec.source = source_from_name(fields[5]);
  rec.id = fields[6];
  return rec;
}

CorpusRecord record_from_json(const nlohmann::json& obj, std::size_t line_no) {
  if (!obj.is_object() || !obj.contains("grapheme") || !obj.contains("source") ||
      !obj.contains("id")) {
    throw_validation("malformed-framing",
                     "corpus line " + std::to_string(line_no) +
                         " needs at least 'grapheme', 'source' and 'id'");
  }
  CorpusRecord rec;
  rec.grapheme = obj["grapheme"].get<std::string>();
  if (obj.contains("phoneme_r1")) {
    rec.phoneme_r1 = PhonemeString::parse(obj["phoneme_r1"].get<std::string>(), Repr::R1);
  }
  if (obj.contains("phoneme_r2")) {
    rec.phoneme_r2 = PhonemeString::parse(obj["phoneme_r2"].get<std::string>(), Repr::R2);
  }
  if (obj.contains("homograph")) rec.homograph = obj["homograph"].get<std::string>();
  if (obj.contains("pronunciation")) {
    rec.pronunciation = PhonemeString::parse(obj["pronunciation"].get<std::string>(), Repr::R1);
  }
  rec.source = source_from_name(obj["source"].get<std::string>());
  rec.id = obj["id"].get<std::string>();
  return rec;
}

}  // namespace

std::vector<CorpusRecord> read_corpus(std::istream& in, CorpusFormat format) {
  std::vector<CorpusRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    CorpusRecord rec;
    if (format == CorpusFormat::tsv) {
      rec = record_from_tsv(line, line_no);
    } else {
      nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
      if (obj.is_discarded()) {
        throw_validation("malformed-framing",
                         "corpus line " + std::to_string(line_no) + " is not valid JSON");
      }
      rec = record_from_json(obj, line_no);
    }
    try {
      rec.validate();
    } catch (const Error& e) {
      throw Error(ErrorClass::validation, e.reason(),
                  "corpus line " + std::to_string(line_no) + ": " + e.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CorpusRecord> read_corpus_file(const std::string& path, CorpusFormat format) {
  auto in = detail::open_input(path);
  return read_corpus(in, format);
}

std::string record_to_tsv(const CorpusRecord& record) {
  check_field_clean(record.grapheme, "grapheme");
  check_field_clean(record.id, "id");
  if (record.homograph) check_field_clean(*record.homograph, "homograph");
  std::string out;
  out += record.grapheme;
  out += '\t';
  out += record.phoneme_r1 ? record.phoneme_r1->to_text() : "";
  out += '\t';
  out += record.phoneme_r2 ? record.phoneme_r2->to_text() : "";
  out += '\t';
  out += record.homograph ? *record.homograph : "";
  out += '\t';
  out += record.pronunciation ? record.pronunciation->to_text() : "";
  out += '\t';
  out += source_name(record.source);
  out += '\t';
  out += record.id;
  return out;
}

void write_corpus(std::ostream& out, std::span<const CorpusRecord> records, CorpusFormat format) {
  for (const auto& rec : records) {
    if (format == CorpusFormat::tsv) {
      out << record_to_tsv(rec) << '\n';
      continue;
    }
    nlohmann::json obj;
    obj["grapheme"] = rec.grapheme;
    if (rec.phoneme_r1) obj["phoneme_r1"] = rec.phoneme_r1->to_text();
    if (rec.phoneme_r2) obj["phoneme_r2"] = rec.phoneme_r2->to_text();
    if (rec.homograph) obj["homograph"] = *rec.homograph;
    if (rec.pronunciation) obj["pronunciation"] = rec.pronunciation->to_text();
    obj["source"] = source_name(rec.source);
    obj["id"] = rec.id;
    out << obj.dump() << '\n';
  }
}

CorpusStats corpus_stats(std::span<const CorpusRecord> records,
                         const HomographInventory* inventory) {
  CorpusStats stats;
  if (inventory != nullptr) {
    for (const auto& [word, prons] : inventory->items()) {
      for (const auto& pron : prons) stats.homograph_counts[word][pron.to_text()] = 0;
    }
  }
  std::set<std::string> vocabulary;
  for (const auto& rec : records) {
    ++stats.sentence_count;
    ++stats.source_counts[rec.source];
    std::vector<Token> tokens = tokenize(rec.grapheme);
    ++stats.word_count_histogram[tokens.size()];
    vocabulary.insert(tokens.begin(), tokens.end());
    if (rec.homograph) {
      ++stats.homograph_counts[*rec.homograph][rec.pronunciation->to_text()];
    }
  }
  stats.unique_word_count = vocabulary.size();
  return stats;
}

std::map<std::string, BalanceEntry> balance_report(const CorpusStats& stats) {
  std::map<std::string, BalanceEntry> report;
  for (const auto& [word, counts] : stats.homograph_counts) {
    BalanceEntry entry;
    entry.max_count = 0;
    entry.min_count = std::numeric_limits<std::size_t>::max();
    for (const auto& [pron, n] : counts) {
      entry.max_count = std::max(entry.max_count, n);
      entry.min_count = std::min(entry.min_count, n);
    }
    if (counts.empty()) {
      entry.min_count = 0;
    }
    if (entry.min_count == 0) {
      entry.ratio = std::numeric_limits<double>::infinity();
      entry.unbalanced = true;
    } else {
      entry.ratio = static_cast<double>(entry.max_count) / static_cast<double>(entry.min_count);
      entry.unbalanced = false;
    }
    report[word] = entry;
  }
  return report;
}

}  // namespace homog2p
