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

#include "homog2p/context_db.hpp"

#include <nlohmann/json.hpp>
#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <set>
#include <sstream>

#include "file_io.hpp"
#include "homog2p/error.hpp"
#include "homog2p/version.hpp"

namespace homog2p {

ContextDatabase ContextDatabase::build(std::span<const CorpusRecord> records,
                                       const StopwordSet& stopwords,
                                       const HomographInventory& inventory, BuildOptions options) {
  ContextDatabase db;
  db.stopwords_fingerprint_ = stopwords.fingerprint();

  for (const auto& rec : records) {
    if (!rec.homograph) continue;
    const std::string& homograph = *rec.homograph;
    const auto* inventory_prons = inventory.find(homograph);
    if (inventory_prons == nullptr) {
      throw_validation("unknown-homograph",
                       "annotated homograph '" + homograph + "' is not in the inventory (id '" +
                           rec.id + "')");
    }
    const std::string pron_text = rec.pronunciation->to_text();
    std::uint32_t order = 0;
    bool found = false;
    for (std::size_t i = 0; i < inventory_prons->size(); ++i) {
      if ((*inventory_prons)[i].to_text() == pron_text) {
        order = static_cast<std::uint32_t>(i);
        found = true;
        break;
      }
    }
    if (!found) {
      throw_validation("unknown-pronunciation",
                       "pronunciation '" + pron_text + "' is not listed for homograph '" +
                           homograph + "' (id '" + rec.id + "')");
    }

    auto& stats = db.entries_[homograph][pron_text];
    stats.order = order;
    ++stats.prior;

    std::vector<Token> context = content_words(tokenize(rec.grapheme), stopwords);
    if (options.dedupe_context_per_sentence) {
      std::set<Token> seen;
      for (const Token& word : context) {
        if (word == homograph) continue;
        if (seen.insert(word).second) {
          ++stats.weights[word];
          ++stats.total_weight;
        }
      }
    } else {
      for (const Token& word : context) {
        if (word == homograph) continue;
        ++stats.weights[word];
        ++stats.total_weight;
      }
    }
  }
  return db;
}

void ContextDatabase::merge(const ContextDatabase& other) {
  if (stopwords_fingerprint_ != other.stopwords_fingerprint_) {
    throw_validation("fingerprint-mismatch",
                     "cannot merge databases built with different stopword sets");
  }
  for (const auto& [homograph, prons] : other.entries_) {
    auto& mine = entries_[homograph];
    for (const auto& [pron, stats] : prons) {
      auto& target = mine[pron];
      target.order = stats.order;
      target.prior += stats.prior;
      target.total_weight += stats.total_weight;
      for (const auto& [word, count] : stats.weights) target.weights[word] += count;
    }
  }
}

const ContextDatabase::PronunciationMap* ContextDatabase::find(const std::string& homograph) const {
  auto it = entries_.find(homograph);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

constexpr char kMagic[4] = {'H', 'G', '2', 'P'};

void put_u16(std::string& buf, std::uint16_t v) {
  buf.push_back(static_cast<char>(v & 0xFF));
  buf.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32(std::string& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_string(std::string& buf, const std::string& s) {
  put_u32(buf, static_cast<std::uint32_t>(s.size()));
  buf.append(s);
}

class Reader {
 public:
  explicit Reader(std::string data) : data_(std::move(data)) {}

  std::uint16_t u16() { return static_cast<std::uint16_t>(u(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(u(4)); }
  std::uint64_t u64() { return u(8); }

  std::string str() {
    std::uint32_t len = u32();
    need(len);
    std::string out = data_.substr(pos_, len);
    pos_ += len;
    return out;
  }

  bool exhausted() const { return pos_ == data_.size(); }

 private:
  std::uint64_t u(int bytes) {
    need(static_cast<std::size_t>(bytes));
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    }
    pos_ += static_cast<std::size_t>(bytes);
    return v;
  }

  void need(std::size_t n) {
    if (pos_ + n > data_.size()) {
      throw_io("truncated-db", "context database body is truncated");
    }
  }

  std::string data_;
  std::size_t pos_ = 0;
};

std::uint32_t crc_of(const std::string& data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size()));
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

void ContextDatabase::save(std::ostream& out) const {
  std::string body;
  put_u32(body, static_cast<std::uint32_t>(entries_.size()));
  for (const auto& [homograph, prons] : entries_) {
    put_string(body, homograph);
    put_u32(body, static_cast<std::uint32_t>(prons.size()));
    for (const auto& [pron, stats] : prons) {
      put_string(body, pron);
      put_u32(body, stats.order);
      put_u64(body, stats.prior);
      put_u64(body, stats.total_weight);
      put_u32(body, static_cast<std::uint32_t>(stats.weights.size()));
      for (const auto& [word, count] : stats.weights) {
        put_string(body, word);
        put_u64(body, count);
      }
    }
  }

  std::string header;
  header.append(kMagic, 4);
  put_u16(header, kDbFormatVersion);
  put_u16(header, 0);  // flags, reserved
  put_u32(header, stopwords_fingerprint_);
  put_u32(header, crc_of(body));
  put_u64(header, body.size());

  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) {
    throw_io("write-failed", "failed writing context database stream");
  }
}

ContextDatabase ContextDatabase::load(std::istream& in) {
  std::string header(24, '\0');
  in.read(header.data(), 24);
  if (in.gcount() != 24 || std::memcmp(header.data(), kMagic, 4) != 0) {
    throw_io("bad-magic", "not a context database file");
  }
  Reader head(header.substr(4));
  const std::uint16_t version = head.u16();
  head.u16();  // flags
  const std::uint32_t fingerprint = head.u32();
  const std::uint32_t checksum = head.u32();
  const std::uint64_t body_size = head.u64();
  if (version != kDbFormatVersion) {
    throw_io("version-mismatch", "context database format version " + std::to_string(version) +
                                     " is not supported (expected " +
                                     std::to_string(kDbFormatVersion) + ")");
  }

  std::string body(body_size, '\0');
  in.read(body.data(), static_cast<std::streamsize>(body_size));
  if (static_cast<std::uint64_t>(in.gcount()) != body_size) {
    throw_io("truncated-db", "context database body is truncated");
  }
  if (crc_of(body) != checksum) {
    throw_io("checksum-mismatch", "context database checksum mismatch; file is corrupt");
  }

  ContextDatabase db;
  db.stopwords_fingerprint_ = fingerprint;
  Reader reader(std::move(body));
  const std::uint32_t n_homographs = reader.u32();
  for (std::uint32_t h = 0; h < n_homographs; ++h) {
    std::string homograph = reader.str();
    const std::uint32_t n_prons = reader.u32();
    auto& prons = db.entries_[homograph];
    for (std::uint32_t p = 0; p < n_prons; ++p) {
      std::string pron = reader.str();
      PronunciationStats stats;
      stats.order = reader.u32();
      stats.prior = reader.u64();
      stats.total_weight = reader.u64();
      const std::uint32_t n_weights = reader.u32();
      std::uint64_t sum = 0;
      for (std::uint32_t w = 0; w < n_weights; ++w) {
        std::string word = reader.str();
        std::uint64_t count = reader.u64();
        sum += count;
        stats.weights.emplace(std::move(word), count);
      }
      if (sum != stats.total_weight) {
        throw_io("total-mismatch", "stored total_weight disagrees with the weight sum");
      }
      prons.emplace(std::move(pron), std::move(stats));
    }
  }
  if (!reader.exhausted()) {
    throw_io("trailing-bytes", "context database has trailing bytes after the body");
  }
  return db;
}

void ContextDatabase::save_file(const std::string& path) const {
  auto out = detail::open_output(path, /*binary=*/true);
  save(out);
}

ContextDatabase ContextDatabase::load_file(const std::string& path) {
  auto in = detail::open_input(path, /*binary=*/true);
  return load(in);
}

nlohmann::json ContextDatabase::to_json() const {
  nlohmann::json root;
  root["format_version"] = kDbFormatVersion;
  root["stopwords_fingerprint"] = stopwords_fingerprint_;
  nlohmann::json homographs = nlohmann::json::object();
  for (const auto& [homograph, prons] : entries_) {
    nlohmann::json pron_obj = nlohmann::json::object();
    for (const auto& [pron, stats] : prons) {
      pron_obj[pron] = {{"order", stats.order},
                        {"prior", stats.prior},
                        {"total_weight", stats.total_weight},
                        {"weights", stats.weights}};
    }
    homographs[homograph] = std::move(pron_obj);
  }
  root["homographs"] = std::move(homographs);
  return root;
}

}  // namespace homog2p
