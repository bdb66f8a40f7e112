// Copyright 2026 The CKECE Authors.
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

#include "ckece/knowledge_store.hpp"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstring>
#include <iterator>
#include <limits>

#include "ckece/error.hpp"
#include "ckece/io.hpp"
#include "ckece/lexicon.hpp"
#include "ckece/log.hpp"

namespace ckece {

std::string relation_display(std::string_view name) {
  std::string out;
  out.reserve(name.size() + 4);
  char prev = '\0';
  for (char c : name) {
    if (c == '/' || c == '_') {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      bool boundary = std::islower(static_cast<unsigned char>(prev)) ||
                      std::isdigit(static_cast<unsigned char>(prev));
      if (boundary && !out.empty() && out.back() != ' ') out.push_back(' ');
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      out.push_back(c);
    }
    prev = c;
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string Relation::display() const { return relation_display(name_); }

bool Relation::in_family(std::string_view family) const {
  std::string_view name = name_;
  if (name == family) return true;
  return name.size() > family.size() && name.substr(0, family.size()) == family &&
         name[family.size()] == '/';
}

std::optional<ConceptUri> parse_concept_uri(std::string_view uri) {
  // /c/<lang>/<term>[/<pos>[/...]]
  if (uri.size() < 6 || uri.substr(0, 3) != "/c/") return std::nullopt;
  std::string_view rest = uri.substr(3);
  auto slash = std::find(rest.begin(), rest.end(), '/');
  if (slash == rest.end() || slash == rest.begin()) return std::nullopt;
  std::string_view language(rest.begin(), slash);
  std::string_view term(slash + 1, std::find(slash + 1, rest.end(), '/'));

  std::string text;
  text.reserve(term.size());
  for (char c : term) {
    if (c == '_' || std::isspace(static_cast<unsigned char>(c))) {
      if (!text.empty() && text.back() != ' ') text.push_back(' ');
    } else if (c >= 'A' && c <= 'Z') {
      text.push_back(static_cast<char>(c - 'A' + 'a'));
    } else {
      text.push_back(c);
    }
  }
  while (!text.empty() && text.back() == ' ') text.pop_back();
  if (text.empty()) return std::nullopt;
  return ConceptUri{language, std::move(text)};
}

std::optional<double> extract_weight(std::string_view metadata) {
  metadata = trim(metadata);
  if (metadata.empty() || metadata.front() != '{') return std::nullopt;
  static constexpr std::string_view kKey = "\"weight\"";
  size_t pos = metadata.find(kKey);
  if (pos == std::string_view::npos) return std::nullopt;
  pos += kKey.size();
  auto skip_space = [&] {
    while (pos < metadata.size() && std::isspace(static_cast<unsigned char>(metadata[pos]))) {
      ++pos;
    }
  };
  skip_space();
  if (pos >= metadata.size() || metadata[pos] != ':') return std::nullopt;
  ++pos;
  skip_space();
  size_t end = pos;
  while (end < metadata.size() && metadata[end] != ',' && metadata[end] != '}' &&
         !std::isspace(static_cast<unsigned char>(metadata[end]))) {
    ++end;
  }
  double weight = 0.0;
  if (!parse_double(metadata.substr(pos, end - pos), weight)) return std::nullopt;
  return weight;
}

// ---------------------------------------------------------------------------
// Builder

std::uint32_t KnowledgeStoreBuilder::intern_concept(std::string_view text) {
  auto [it, inserted] =
      concept_ids_.try_emplace(std::string(text), static_cast<std::uint32_t>(concepts_.size()));
  if (inserted) {
    if (concepts_.size() >= std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorKind::kInvalidArgument, "too many concepts");
    }
    concepts_.emplace_back(text);
  }
  return it->second;
}

std::uint16_t KnowledgeStoreBuilder::intern_relation(std::string_view name) {
  auto [it, inserted] =
      relation_ids_.try_emplace(std::string(name), static_cast<std::uint16_t>(relations_.size()));
  if (inserted) {
    if (relations_.size() >= std::numeric_limits<std::uint16_t>::max()) {
      throw Error(ErrorKind::kInvalidArgument, "too many distinct relations");
    }
    relations_.emplace_back(name);
  }
  return it->second;
}

void KnowledgeStoreBuilder::add(std::string_view start, std::string_view relation,
                                std::string_view end, double raw_confidence) {
  if (start.empty() || end.empty() || relation.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "assertion fields must be non-empty");
  }
  if (!(raw_confidence > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "raw confidence must be positive");
  }
  Edge edge{intern_concept(start), intern_concept(end), intern_relation(relation),
            raw_confidence};
  edges_.push_back(edge);
}

KnowledgeStore KnowledgeStoreBuilder::build() && {
  KnowledgeStore store;
  store.concepts_ = std::move(concepts_);
  store.concept_ids_ = std::move(concept_ids_);
  store.relations_ = std::move(relations_);
  store.edges_.reserve(edges_.size());
  for (const Edge &e : edges_) {
    store.edges_.push_back({e.start, e.end, e.relation, e.raw,
                            min_max_scale(e.raw, kConfidenceBounds)});
  }
  edges_.clear();
  relation_ids_.clear();
  std::stable_sort(store.edges_.begin(), store.edges_.end(),
                   [](const auto &a, const auto &b) { return a.start < b.start; });
  store.build_index();
  return store;
}

// ---------------------------------------------------------------------------
// Store

void KnowledgeStore::build_index() {
  offsets_.assign(concepts_.size() + 1, 0);
  for (const Edge &e : edges_) ++offsets_[e.start + 1];
  for (size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

KnowledgeStore KnowledgeStore::ingest(std::istream &in, const IngestOptions &options,
                                      IngestStats *stats) {
  KnowledgeStoreBuilder builder;
  IngestStats local;
  std::string line;
  auto reject = [&](std::string_view why) {
    if (options.strict) throw Error(ErrorKind::kParse, std::string(why), local.lines);
    ++local.malformed;
    log()->debug("line {}: skipped ({})", local.lines, why);
  };

  while (std::getline(in, line)) {
    ++local.lines;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.empty()) continue;

    auto fields = split(view, '\t');
    if (fields.size() != 5) {
      reject("expected 5 tab-separated fields, got " + std::to_string(fields.size()));
      continue;
    }
    std::string_view rel = fields[1];
    if (rel.size() < 4 || rel.substr(0, 3) != "/r/") {
      reject("relation URI must start with /r/");
      continue;
    }
    rel.remove_prefix(3);
    while (!rel.empty() && rel.back() == '/') rel.remove_suffix(1);
    if (rel.empty()) {
      reject("empty relation name");
      continue;
    }

    auto start = parse_concept_uri(fields[2]);
    auto end = parse_concept_uri(fields[3]);
    if (!start || !end || start->language != options.language ||
        end->language != options.language) {
      // External URLs and other-language nodes are out of scope, not errors.
      ++local.language_filtered;
      continue;
    }

    auto weight = extract_weight(fields[4]);
    if (!weight || !(*weight > 0.0)) {
      ++local.missing_weight;
      continue;
    }
    builder.add(start->text, rel, end->text, *weight);
    ++local.kept;
    if ((local.kept & 0xFFFFF) == 0) log()->info("ingested {} assertions", local.kept);
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read error while ingesting assertions");
  if (local.malformed) log()->warn("skipped {} malformed lines", local.malformed);
  if (stats) *stats = local;
  return std::move(builder).build();
}

Assertion KnowledgeStore::materialize(const Edge &edge) const {
  return Assertion{concepts_[edge.start], Relation(relations_[edge.relation]),
                   concepts_[edge.end], edge.raw, edge.scaled};
}

std::vector<Assertion> KnowledgeStore::query(std::string_view keyword) const {
  std::vector<Assertion> out;
  auto it = concept_ids_.find(std::string(keyword));
  if (it == concept_ids_.end()) return out;
  std::uint32_t id = it->second;
  out.reserve(offsets_[id + 1] - offsets_[id]);
  for (std::uint32_t i = offsets_[id]; i < offsets_[id + 1]; ++i) {
    out.push_back(materialize(edges_[i]));
  }
  return out;
}

std::size_t KnowledgeStore::key_count() const {
  std::size_t n = 0;
  for (size_t i = 0; i + 1 < offsets_.size(); ++i) n += offsets_[i + 1] > offsets_[i];
  return n;
}

std::vector<Assertion> KnowledgeStore::all() const {
  std::vector<Assertion> out;
  out.reserve(edges_.size());
  for (const Edge &e : edges_) out.push_back(materialize(e));
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

constexpr char kMagic[8] = {'C', 'K', 'E', 'C', 'E', 'K', 'S', '\0'};

class Writer {
 public:
  template <typename T>
  void put(T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    if constexpr (std::is_same_v<T, double>) {
      put(std::bit_cast<std::uint64_t>(value));
    } else {
      for (size_t i = 0; i < sizeof(T); ++i) {
        buf_.push_back(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF));
      }
    }
  }
  void put_string(const std::string &s) {
    put(static_cast<std::uint32_t>(s.size()));
    buf_.append(s);
  }
  const std::string &bytes() const { return buf_; }

 private:
  std::string buf_;
};

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  template <typename T>
  T get() {
    if constexpr (std::is_same_v<T, double>) {
      return std::bit_cast<double>(get<std::uint64_t>());
    } else {
      need(sizeof(T));
      std::uint64_t v = 0;
      for (size_t i = 0; i < sizeof(T); ++i) {
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
      }
      pos_ += sizeof(T);
      return static_cast<T>(v);
    }
  }
  std::string get_string() {
    auto n = get<std::uint32_t>();
    need(n);
    std::string s(data_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  void need(size_t n) const {
    if (data_.size() - pos_ < n) throw Error(ErrorKind::kFormat, "store payload truncated");
  }
  std::string_view data_;
  size_t pos_ = 0;
};

std::uint32_t checksum(std::string_view data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large payloads in chunks.
  constexpr size_t kChunk = 1u << 30;
  for (size_t off = 0; off < data.size(); off += kChunk) {
    size_t n = std::min(kChunk, data.size() - off);
    crc = crc32(crc, reinterpret_cast<const Bytef *>(data.data() + off), static_cast<uInt>(n));
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

void KnowledgeStore::save(std::ostream &out) const {
  Writer payload;
  payload.put(static_cast<std::uint32_t>(relations_.size()));
  for (const auto &r : relations_) payload.put_string(r);
  payload.put(static_cast<std::uint32_t>(concepts_.size()));
  for (const auto &c : concepts_) payload.put_string(c);
  payload.put(static_cast<std::uint64_t>(edges_.size()));
  for (const Edge &e : edges_) {
    payload.put(e.start);
    payload.put(e.relation);
    payload.put(e.end);
    payload.put(e.raw);
  }

  Writer header;
  header.put(static_cast<std::uint64_t>(payload.bytes().size()));
  Writer trailer;
  trailer.put(checksum(payload.bytes()));

  out.write(kMagic, sizeof kMagic);
  out.put(static_cast<char>(kFormatVersion));
  out.write(header.bytes().data(), static_cast<std::streamsize>(header.bytes().size()));
  out.write(payload.bytes().data(), static_cast<std::streamsize>(payload.bytes().size()));
  out.write(trailer.bytes().data(), static_cast<std::streamsize>(trailer.bytes().size()));
  if (!out) throw Error(ErrorKind::kIo, "failed to write knowledge store");
}

KnowledgeStore KnowledgeStore::load(std::istream &in) {
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::kIo, "read error while loading knowledge store");
  constexpr size_t kHeader = sizeof kMagic + 1 + 8;
  if (data.size() < sizeof kMagic || std::memcmp(data.data(), kMagic, sizeof kMagic) != 0) {
    throw Error(ErrorKind::kFormat, "not a knowledge store file (bad magic)");
  }
  if (data.size() < sizeof kMagic + 1) throw Error(ErrorKind::kFormat, "missing version byte");
  auto version = static_cast<std::uint8_t>(data[sizeof kMagic]);
  if (version != kFormatVersion) {
    throw Error(ErrorKind::kFormat, "unsupported store version " + std::to_string(version) +
                                        " (expected " + std::to_string(kFormatVersion) + ")");
  }
  if (data.size() < kHeader) throw Error(ErrorKind::kFormat, "store header truncated");
  auto payload_size = Reader(std::string_view(data).substr(sizeof kMagic + 1, 8)).get<std::uint64_t>();
  if (data.size() - kHeader < payload_size || data.size() - kHeader - payload_size != 4) {
    throw Error(ErrorKind::kFormat, "store file truncated or has trailing bytes");
  }
  std::string_view payload = std::string_view(data).substr(kHeader, payload_size);
  auto stored_crc = Reader(std::string_view(data).substr(kHeader + payload_size)).get<std::uint32_t>();
  if (stored_crc != checksum(payload)) throw Error(ErrorKind::kFormat, "store checksum mismatch");

  Reader r(payload);
  KnowledgeStore store;
  auto relation_count = r.get<std::uint32_t>();
  store.relations_.reserve(relation_count);
  for (std::uint32_t i = 0; i < relation_count; ++i) store.relations_.push_back(r.get_string());
  auto concept_count = r.get<std::uint32_t>();
  store.concepts_.reserve(concept_count);
  store.concept_ids_.reserve(concept_count);
  for (std::uint32_t i = 0; i < concept_count; ++i) {
    store.concepts_.push_back(r.get_string());
    if (!store.concept_ids_.emplace(store.concepts_.back(), i).second) {
      throw Error(ErrorKind::kFormat, "duplicate concept in store");
    }
  }
  auto edge_count = r.get<std::uint64_t>();
  store.edges_.reserve(static_cast<size_t>(std::min<std::uint64_t>(edge_count, payload.size())));
  std::uint32_t last_start = 0;
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    Edge e{};
    e.start = r.get<std::uint32_t>();
    e.relation = r.get<std::uint16_t>();
    e.end = r.get<std::uint32_t>();
    e.raw = r.get<double>();
    if (e.start >= concept_count || e.end >= concept_count || e.relation >= relation_count ||
        e.start < last_start) {
      throw Error(ErrorKind::kFormat, "corrupt edge record");
    }
    last_start = e.start;
    e.scaled = min_max_scale(e.raw, kConfidenceBounds);
    store.edges_.push_back(e);
  }
  if (!r.done()) throw Error(ErrorKind::kFormat, "unexpected bytes after edge records");
  store.build_index();
  return store;
}

}  // namespace ckece
