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

#include "ckece/extractor.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ckece/error.hpp"
#include "ckece/io.hpp"

namespace ckece {

std::set<std::string> default_excluded_relations() {
  return {"Antonym",
          "ExternalURL",
          "NotDesires",
          "NotHasProperty",
          "NotCapableOf",
          "dbpedia",
          "DistinctFrom",
          "EtymologicallyDerivedFrom",
          "EtymologicallyRelatedTo",
          "SymbolOf",
          "FormOf",
          "AtLocation",
          "DerivedFrom"};
}

void ExtractorConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "alpha must lie in [0,1]");
  }
  if (tuples_per_keyword == 0 || tuples_per_context == 0 || max_keywords == 0) {
    throw Error(ErrorKind::kInvalidArgument, "tuple and keyword limits must be positive");
  }
}

std::uint8_t removal_reasons(const CandidateTuple &candidate, const ExtractorConfig &config,
                             const StopwordSet &stopwords) {
  const Assertion &a = candidate.assertion;
  std::uint8_t reasons = kKeep;
  if (stopwords.contains(candidate.keyword) || stopwords.contains(a.end)) reasons |= kStopword;
  if (a.scaled_confidence < config.alpha) reasons |= kLowConfidence;
  if (to_lower(candidate.keyword) == to_lower(a.end) || stems_equal(candidate.keyword, a.end)) {
    reasons |= kSameStem;
  }
  for (const auto &family : config.excluded_relations) {
    if (a.relation.in_family(family)) {
      reasons |= kExcludedRelation;
      break;
    }
  }
  return reasons;
}

std::vector<CandidateTuple> filter_tuples(std::vector<CandidateTuple> candidates,
                                          const ExtractorConfig &config,
                                          const StopwordSet &stopwords) {
  std::erase_if(candidates, [&](const CandidateTuple &c) {
    return removal_reasons(c, config, stopwords) != kKeep;
  });
  return candidates;
}

ScoredTuple score_tuple(const CandidateTuple &candidate, const VadLexicon &lexicon,
                        const VectorStore &vectors) {
  const Assertion &a = candidate.assertion;
  ScoredTuple t;
  t.keyword = candidate.keyword;
  t.relation = a.relation;
  t.concept_text = a.end;
  t.raw_confidence = a.raw_confidence;
  t.scaled_confidence = a.scaled_confidence;
  t.emotion_intensity = lexicon.emotion_intensity(a.end);
  t.similarity = cosine(vectors.embed_token(candidate.keyword), vectors.embed_phrase(a.end));
  t.final_score = t.emotion_intensity + t.similarity + t.scaled_confidence;
  return t;
}

std::string render_concepts(std::span<const ScoredTuple> tuples, ConceptSeparator separator) {
  const std::string_view sep = separator == ConceptSeparator::kComma ? ", " : "; ";
  std::string out;
  for (const ScoredTuple &t : tuples) {
    if (!out.empty()) out += sep;
    out += t.keyword;
    out += " <";
    out += t.relation.display();
    out += "> ";
    out += t.concept_text;
  }
  return out;
}

namespace {

// Descending final score, then relation name and concept ascending.
bool score_order(const ScoredTuple &a, const ScoredTuple &b) {
  if (a.final_score != b.final_score) return a.final_score > b.final_score;
  if (a.relation.name() != b.relation.name()) return a.relation.name() < b.relation.name();
  return a.concept_text < b.concept_text;
}

// Sense-stripped dumps can hold the same (relation, concept) twice under one
// start node; keep the most confident copy, first one on ties.
void dedupe(std::vector<CandidateTuple> &candidates) {
  std::map<std::pair<std::string_view, std::string_view>, size_t> best;
  std::vector<bool> keep(candidates.size(), false);
  for (size_t i = 0; i < candidates.size(); ++i) {
    const Assertion &a = candidates[i].assertion;
    auto [it, inserted] = best.try_emplace({a.relation.name(), a.end}, i);
    if (inserted) {
      keep[i] = true;
    } else if (a.scaled_confidence > candidates[it->second].assertion.scaled_confidence) {
      keep[it->second] = false;
      keep[i] = true;
      it->second = i;
    }
  }
  std::vector<CandidateTuple> out;
  out.reserve(best.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) out.push_back(std::move(candidates[i]));
  }
  candidates = std::move(out);
}

}  // namespace

ConceptExtractor::ConceptExtractor(const KnowledgeStore &store, const VadLexicon &lexicon,
                                   const VectorStore &vectors, const StopwordSet &stopwords,
                                   ExtractorConfig config, ConceptSeparator separator)
    : store_(store),
      lexicon_(lexicon),
      vectors_(vectors),
      stopwords_(stopwords),
      config_(std::move(config)),
      separator_(separator),
      default_provider_(vectors),
      keyword_provider_(&default_provider_) {
  config_.validate();
}

void ConceptExtractor::set_keyword_provider(const EmbeddingProvider *keyword_provider) {
  keyword_provider_ = keyword_provider != nullptr ? keyword_provider : &default_provider_;
}

std::vector<ScoredTuple> ConceptExtractor::select(std::span<const Keyword> keywords) const {
  struct Ranked {
    ScoredTuple tuple;
    size_t keyword_rank;
  };
  std::vector<Ranked> pool;

  for (size_t rank = 0; rank < keywords.size(); ++rank) {
    const std::string &keyword = keywords[rank].token;
    std::vector<CandidateTuple> candidates;
    for (auto &assertion : store_.query(keyword)) {
      candidates.push_back({keyword, std::move(assertion)});
    }
    candidates = filter_tuples(std::move(candidates), config_, stopwords_);
    dedupe(candidates);

    std::vector<ScoredTuple> scored;
    scored.reserve(candidates.size());
    for (const auto &c : candidates) scored.push_back(score_tuple(c, lexicon_, vectors_));
    std::sort(scored.begin(), scored.end(), score_order);
    if (scored.size() > config_.tuples_per_keyword) scored.resize(config_.tuples_per_keyword);
    for (auto &t : scored) pool.push_back({std::move(t), rank});
  }

  std::sort(pool.begin(), pool.end(), [](const Ranked &a, const Ranked &b) {
    if (score_order(a.tuple, b.tuple)) return true;
    if (score_order(b.tuple, a.tuple)) return false;
    return a.keyword_rank < b.keyword_rank;
  });
  if (pool.size() > config_.tuples_per_context) pool.resize(config_.tuples_per_context);

  std::vector<ScoredTuple> out;
  out.reserve(pool.size());
  for (auto &r : pool) out.push_back(std::move(r.tuple));
  return out;
}

ConceptSet ConceptExtractor::extract(std::string_view context) const {
  ConceptSet set;
  set.keywords = extract_keywords(context, *keyword_provider_, stopwords_, config_.max_keywords);
  set.tuples = select(set.keywords);
  set.rendered = render_concepts(set.tuples, separator_);
  return set;
}

ConceptSet extract_concepts(std::string_view context, const KnowledgeStore &store,
                            const VadLexicon &lexicon, const VectorStore &vectors,
                            const StopwordSet &stopwords, const ExtractorConfig &config) {
  return ConceptExtractor(store, lexicon, vectors, stopwords, config).extract(context);
}

}  // namespace ckece
