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

#ifndef CKECE_EXTRACTOR_HPP_
#define CKECE_EXTRACTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ckece/embeddings.hpp"
#include "ckece/keywords.hpp"
#include "ckece/knowledge_store.hpp"
#include "ckece/lexicon.hpp"
#include "ckece/text.hpp"

namespace ckece {

// Relations dropped before scoring. Entries match a relation and its
// sub-relations, so "dbpedia" covers "dbpedia/genre".
std::set<std::string> default_excluded_relations();

struct ExtractorConfig {
  double alpha = 0.1;                 // minimum scaled confidence
  std::size_t tuples_per_keyword = 3;
  std::size_t tuples_per_context = 10;
  std::size_t max_keywords = kDefaultMaxKeywords;
  std::set<std::string> excluded_relations = default_excluded_relations();

  // Throws Error(kInvalidArgument) if alpha is outside [0,1] or a limit is 0.
  void validate() const;
};

// An assertion reached from a context keyword.
struct CandidateTuple {
  std::string keyword;
  Assertion assertion;
};

// Why a candidate is dropped; several may apply at once.
enum RemovalReason : std::uint8_t {
  kKeep = 0,
  kStopword = 1 << 0,          // keyword or concept is a stop word
  kLowConfidence = 1 << 1,     // scaled confidence below alpha
  kSameStem = 1 << 2,          // keyword and concept equal or share a stem
  kExcludedRelation = 1 << 3,  // relation on the exclusion list
};

std::uint8_t removal_reasons(const CandidateTuple &candidate, const ExtractorConfig &config,
                             const StopwordSet &stopwords);

std::vector<CandidateTuple> filter_tuples(std::vector<CandidateTuple> candidates,
                                          const ExtractorConfig &config,
                                          const StopwordSet &stopwords);

struct ScoredTuple {
  std::string keyword;
  Relation relation;
  std::string concept_text;
  double raw_confidence = 0.0;
  double scaled_confidence = 0.0;
  double emotion_intensity = 0.0;
  double similarity = 0.0;
  double final_score = 0.0;  // intensity + similarity + scaled confidence

  friend bool operator==(const ScoredTuple &, const ScoredTuple &) = default;
};

ScoredTuple score_tuple(const CandidateTuple &candidate, const VadLexicon &lexicon,
                        const VectorStore &vectors);

enum class ConceptSeparator { kSemicolon, kComma };

// "keyword <relation display> concept" entries joined by "; " (or ", ").
std::string render_concepts(std::span<const ScoredTuple> tuples,
                            ConceptSeparator separator = ConceptSeparator::kSemicolon);

struct ConceptSet {
  std::vector<Keyword> keywords;
  std::vector<ScoredTuple> tuples;
  std::string rendered;
};

// The full keyword -> lookup -> filter -> score -> select pipeline over
// borrowed, immutable resources. Thread-safe: extract() is const and the
// resources are read-only.
class ConceptExtractor {
 public:
  ConceptExtractor(const KnowledgeStore &store, const VadLexicon &lexicon,
                   const VectorStore &vectors, const StopwordSet &stopwords,
                   ExtractorConfig config = {},
                   ConceptSeparator separator = ConceptSeparator::kSemicolon);

  // Uses `keyword_provider` instead of the word vectors for keyword
  // extraction. The provider must outlive the extractor.
  void set_keyword_provider(const EmbeddingProvider *keyword_provider);

  ConceptSet extract(std::string_view context) const;

  // Candidate selection for an already-extracted keyword list.
  std::vector<ScoredTuple> select(std::span<const Keyword> keywords) const;

  const ExtractorConfig &config() const { return config_; }

 private:
  const KnowledgeStore &store_;
  const VadLexicon &lexicon_;
  const VectorStore &vectors_;
  const StopwordSet &stopwords_;
  ExtractorConfig config_;
  ConceptSeparator separator_;
  StaticVectorProvider default_provider_;
  const EmbeddingProvider *keyword_provider_;
};

ConceptSet extract_concepts(std::string_view context, const KnowledgeStore &store,
                            const VadLexicon &lexicon, const VectorStore &vectors,
                            const StopwordSet &stopwords, const ExtractorConfig &config = {});

}  // namespace ckece

#endif  // CKECE_EXTRACTOR_HPP_
