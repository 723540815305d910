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

#include "homog2p/lexicon.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

#include "file_io.hpp"
#include "homog2p/error.hpp"

namespace homog2p {

namespace {

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

}  // namespace

void Lexicon::add(const std::string& word, PhonemeString pronunciation) {
  auto [it, inserted] = entries_.try_emplace(word);
  if (inserted) words_.push_back(word);
  auto& prons = it->second;
  if (std::find(prons.begin(), prons.end(), pronunciation) == prons.end()) {
    prons.push_back(std::move(pronunciation));
  }
}

std::span<const PhonemeString> Lexicon::lookup(const Token& word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) return {};
  return {it->second.data(), it->second.size()};
}

Lexicon Lexicon::load(std::istream& in, LexiconFormat format, Repr repr) {
  Lexicon lex;
  lex.repr_ = repr;
  std::string line;
  std::size_t line_no = 0;

  auto parse_pron = [&](const std::string& text) {
    PhonemeString ps = PhonemeString::parse(text, repr);
    if (ps.empty()) {
      throw_validation("malformed-line",
                       "empty pronunciation at line " + std::to_string(line_no));
    }
    if (ps.word_count() != 1) {
      throw_validation("malformed-line", "lexicon pronunciations are single words, got " +
                                             std::to_string(ps.word_count()) + " at line " +
                                             std::to_string(line_no));
    }
    return ps;
  };

  if (format == LexiconFormat::tsv) {
    while (detail::read_line(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      auto fields = split_on_tabs(line);
      if (fields.size() < 2) {
        throw_validation("malformed-line", "lexicon line " + std::to_string(line_no) +
                                               " needs 'word<TAB>pron...'");
      }
      std::string word = normalize(fields[0]);
      if (word.empty() || word.find(' ') != std::string::npos) {
        throw_validation("malformed-line",
                         "bad lexicon key at line " + std::to_string(line_no));
      }
      for (std::size_t i = 1; i < fields.size(); ++i) {
        lex.add(word, parse_pron(fields[i]));
      }
    }
    return lex;
  }

  // JSONL. An optional per-line "repr" must agree with the file-level one;
  // disagreement on an already-seen word is the duplicate-key conflict case.
  while (detail::read_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      throw_validation("malformed-line",
                       "lexicon line " + std::to_string(line_no) + " is not a JSON object");
    }
    if (!obj.contains("word") || !obj["word"].is_string() || !obj.contains("pronunciations") ||
        !obj["pronunciations"].is_array()) {
      throw_validation("malformed-line", "lexicon line " + std::to_string(line_no) +
                                             " needs 'word' and 'pronunciations'");
    }
    if (obj.contains("repr")) {
      Repr line_repr = repr_from_name(obj["repr"].get<std::string>());
      if (line_repr != repr) {
        std::string word = normalize(obj["word"].get<std::string>());
        if (lex.contains(word)) {
          throw_validation("duplicate-key-conflict",
                           "word '" + word + "' redeclared with conflicting representation at line " +
                               std::to_string(line_no));
        }
        throw_validation("repr-conflict", "line " + std::to_string(line_no) +
                                              " declares a different representation than the file");
      }
    }
    std::string word = normalize(obj["word"].get<std::string>());
    if (word.empty() || word.find(' ') != std::string::npos) {
      throw_validation("malformed-line", "bad lexicon key at line " + std::to_string(line_no));
    }
    if (obj["pronunciations"].empty()) {
      throw_validation("malformed-line",
                       "no pronunciations at line " + std::to_string(line_no));
    }
    for (const auto& pron : obj["pronunciations"]) {
      if (!pron.is_string()) {
        throw_validation("malformed-line",
                         "pronunciation is not a string at line " + std::to_string(line_no));
      }
      lex.add(word, parse_pron(pron.get<std::string>()));
    }
  }
  return lex;
}

Lexicon Lexicon::load_file(const std::string& path, LexiconFormat format, Repr repr) {
  auto in = detail::open_input(path);
  return load(in, format, repr);
}

const std::vector<PhonemeString>* HomographInventory::find(const std::string& word) const {
  auto it = items_.find(word);
  return it == items_.end() ? nullptr : &it->second;
}

void HomographInventory::add(const std::string& word, std::vector<PhonemeString> pronunciations) {
  if (pronunciations.size() < 2) {
    throw_validation("not-a-homograph",
                     "inventory entries need >=2 pronunciations: '" + word + "'");
  }
  if (exclusions_.count(word) > 0) {
    throw_validation("excluded-word", "word is excluded from the inventory: '" + word + "'");
  }
  items_[word] = std::move(pronunciations);
}

std::map<std::size_t, std::size_t> HomographInventory::pronunciation_histogram() const {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& [word, prons] : items_) ++hist[prons.size()];
  return hist;
}

HomographInventory extract_homographs(const Lexicon& lexicon, const StopwordSet& exclusions) {
  HomographInventory inv;
  inv.set_exclusions({exclusions.words().begin(), exclusions.words().end()});
  for (const auto& word : lexicon.words()) {
    if (exclusions.contains(word)) continue;
    auto prons = lexicon.lookup(word);
    if (prons.size() >= 2) {
      inv.add(word, {prons.begin(), prons.end()});
    }
  }
  return inv;
}

}  // namespace homog2p
