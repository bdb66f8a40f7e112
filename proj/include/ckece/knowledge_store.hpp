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

#ifndef CKECE_KNOWLEDGE_STORE_HPP_
#define CKECE_KNOWLEDGE_STORE_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ckece {

// A ConceptNet relation, identified by the segment after "/r/" in the dump
// (e.g. "IsA", "CausesDesire", "dbpedia/genre").
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::string name) : name_(std::move(name)) {}

  const std::string &name() const { return name_; }

  // Lowercase words split at camel-case boundaries: IsA -> "is a".
  std::string display() const;

  // True when the relation is `family` itself or a sub-relation of it
  // ("dbpedia/genre" belongs to "dbpedia").
  bool in_family(std::string_view family) const;

  friend bool operator==(const Relation &, const Relation &) = default;
  friend auto operator<=>(const Relation &, const Relation &) = default;

 private:
  std::string name_;
};

std::string relation_display(std::string_view relation_name);

struct Assertion {
  std::string start;
  Relation relation;
  std::string end;
  double raw_confidence = 0.0;
  double scaled_confidence = 0.0;

  friend bool operator==(const Assertion &, const Assertion &) = default;
};

struct IngestOptions {
  std::string language = "en";
  bool strict = false;
};

struct IngestStats {
  std::uint64_t lines = 0;
  std::uint64_t kept = 0;
  std::uint64_t language_filtered = 0;
  std::uint64_t malformed = 0;
  std::uint64_t missing_weight = 0;
};

// Concept text for a ConceptNet node URI: /c/en/blood_cell/n -> "blood cell".
// Returns nullopt when the URI is not a /c/<lang>/<term> node.
struct ConceptUri {
  std::string_view language;
  std::string text;
};
std::optional<ConceptUri> parse_concept_uri(std::string_view uri);

// Reads "weight" out of a ConceptNet metadata object without a full JSON
// parse. nullopt when the object or the weight is missing or unparseable.
std::optional<double> extract_weight(std::string_view metadata);

class KnowledgeStore;

// Append-only builder. Concepts and relations are interned in first-seen
// order so identical input sequences produce identical stores.
class KnowledgeStoreBuilder {
 public:
  void add(std::string_view start, std::string_view relation, std::string_view end,
           double raw_confidence);
  std::size_t size() const { return edges_.size(); }
  KnowledgeStore build() &&;

 private:
  friend class KnowledgeStore;
  struct Edge {
    std::uint32_t start;
    std::uint32_t end;
    std::uint16_t relation;
    double raw;
  };
  std::uint32_t intern_concept(std::string_view text);
  std::uint16_t intern_relation(std::string_view name);

  std::vector<std::string> concepts_;
  std::unordered_map<std::string, std::uint32_t> concept_ids_;
  std::vector<std::string> relations_;
  std::unordered_map<std::string, std::uint16_t> relation_ids_;
  std::vector<Edge> edges_;
};

// Immutable keyword -> assertions index. Assertions sharing a start concept
// are contiguous and kept in ingestion order.
class KnowledgeStore {
 public:
  KnowledgeStore() = default;

  static KnowledgeStore ingest(std::istream &in, const IngestOptions &options = {},
                               IngestStats *stats = nullptr);

  // Assertions whose start concept equals `keyword`, in ingestion order.
  std::vector<Assertion> query(std::string_view keyword) const;

  std::size_t assertion_count() const { return edges_.size(); }
  std::size_t concept_count() const { return concepts_.size(); }
  std::size_t relation_count() const { return relations_.size(); }
  // Distinct start concepts with at least one assertion.
  std::size_t key_count() const;

  // Every assertion, grouped by start concept.
  std::vector<Assertion> all() const;

  // Binary layout: "CKECEKS\0", version byte, u64 payload size, payload,
  // CRC-32 of the payload. All integers little-endian.
  void save(std::ostream &out) const;
  static KnowledgeStore load(std::istream &in);

  static constexpr std::uint8_t kFormatVersion = 1;

 private:
  friend class KnowledgeStoreBuilder;
  struct Edge {
    std::uint32_t start;
    std::uint32_t end;
    std::uint16_t relation;
    double raw;
    double scaled;
  };
  Assertion materialize(const Edge &edge) const;
  void build_index();

  std::vector<std::string> concepts_;
  std::unordered_map<std::string, std::uint32_t> concept_ids_;
  std::vector<std::string> relations_;
  std::vector<Edge> edges_;             // sorted by start, stable
  std::vector<std::uint32_t> offsets_;  // concepts_.size() + 1 entries
};

}  // namespace ckece

#endif  // CKECE_KNOWLEDGE_STORE_HPP_
