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

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "ckece/error.hpp"
#include "ckece/extractor.hpp"
#include "ckece/records.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace ckece;

namespace {

const StopwordSet &stop() { return StopwordSet::bundled(); }

CandidateTuple candidate(const std::string &keyword, const std::string &rel,
                         const std::string &concept_text, double scaled) {
  Assertion a;
  a.start = keyword;
  a.relation = Relation(rel);
  a.end = concept_text;
  a.scaled_confidence = scaled;
  a.raw_confidence = 1.0 + 9.0 * scaled;
  return {keyword, a};
}

ScoredTuple tuple(const std::string &k, const std::string &rel, const std::string &c) {
  ScoredTuple t;
  t.keyword = k;
  t.relation = Relation(rel);
  t.concept_text = c;
  return t;
}

const char *kFearContext =
    "I am being in fear lately. oh no! Any particular reason why? "
    "I stared to cough blood 3 days ago and I fear it must be cancer.";

}  // namespace

TEST_SUITE("extractor") {

TEST_CASE("default configuration") {
  ExtractorConfig config;
  CHECK(config.alpha == 0.1);
  CHECK(config.tuples_per_keyword == 3);
  CHECK(config.tuples_per_context == 10);
  CHECK(config.max_keywords == 10);
  CHECK(config.excluded_relations ==
        std::set<std::string>{"Antonym", "ExternalURL", "NotDesires", "NotHasProperty",
                              "NotCapableOf", "dbpedia", "DistinctFrom",
                              "EtymologicallyDerivedFrom", "EtymologicallyRelatedTo", "SymbolOf",
                              "FormOf", "AtLocation", "DerivedFrom"});
  CHECK_NOTHROW(config.validate());
  config.alpha = 1.5;
  CHECK_THROWS_AS(config.validate(), Error);
  config.alpha = 0.1;
  config.tuples_per_keyword = 0;
  CHECK_THROWS_AS(config.validate(), Error);
}

TEST_CASE("removal rules") {
  ExtractorConfig config;
  CHECK(removal_reasons(candidate("addition", "Synonym", "addition", 0.11), config, stop()) ==
        kSameStem);
  CHECK(removal_reasons(candidate("actual", "DerivedFrom", "actually", 0.11), config, stop()) ==
        (kSameStem | kExcludedRelation));
  CHECK(removal_reasons(candidate("fear", "IsA", "panic", 0.05), config, stop()) ==
        kLowConfidence);
  CHECK(removal_reasons(candidate("fear", "IsA", "panic", 0.3), config, stop()) == kKeep);
  CHECK(removal_reasons(candidate("fear", "IsA", "panic", 0.1), config, stop()) == kKeep);
  CHECK(removal_reasons(candidate("fear", "RelatedTo", "the", 0.3), config, stop()) == kStopword);
  CHECK(removal_reasons(candidate("the", "RelatedTo", "fear", 0.3), config, stop()) == kStopword);
  CHECK(removal_reasons(candidate("fear", "Antonym", "courage", 0.3), config, stop()) ==
        kExcludedRelation);
  CHECK(removal_reasons(candidate("cancer", "dbpedia/genre", "crab", 0.3), config, stop()) ==
        kExcludedRelation);
  CHECK(removal_reasons(candidate("fear", "RelatedTo", "Fear", 0.3), config, stop()) ==
        kSameStem);

  std::vector<CandidateTuple> all = {candidate("fear", "IsA", "panic", 0.3),
                                     candidate("fear", "Antonym", "courage", 0.3),
                                     candidate("fear", "RelatedTo", "scared", 0.2)};
  auto kept = filter_tuples(all, config, stop());
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].assertion.end == "panic");
  CHECK(kept[1].assertion.end == "scared");
}

TEST_CASE("scoring with defaults") {
  VadLexicon empty_lexicon;
  VectorStore no_vectors(4);
  auto c = candidate("loneliness", "CausesDesire", "socialize", 0.0);
  c.assertion.raw_confidence = 3.464;
  c.assertion.scaled_confidence = min_max_scale(3.464, kConfidenceBounds);
  auto t = score_tuple(c, empty_lexicon, no_vectors);
  CHECK(t.emotion_intensity == 0.5);
  CHECK(t.similarity == 0.0);
  CHECK(t.scaled_confidence == doctest::Approx(0.274).epsilon(1e-3));
  CHECK(t.final_score == doctest::Approx(0.774).epsilon(1e-3));
  CHECK(t.final_score == t.emotion_intensity + t.similarity + t.scaled_confidence);
}

TEST_CASE("all-zero components sum to zero") {
  std::istringstream vad("word\tvalence\tarousal\tdominance\ncalm\t0.5\t0.0\t0.5\n");
  auto lexicon = VadLexicon::load(vad);
  VectorStore no_vectors(2);
  auto t = score_tuple(candidate("sea", "HasProperty", "calm", 0.0), lexicon, no_vectors);
  CHECK(t.emotion_intensity == 0.0);
  CHECK(t.similarity == 0.0);
  CHECK(t.final_score == 0.0);
}

TEST_CASE("hand-computed score on the toy resources") {
  const auto &toy = testing::Toy::get();
  auto hits = toy.store.query("fear");
  REQUIRE_FALSE(hits.empty());
  CHECK(hits[0].end == "panic");
  auto t = score_tuple({"fear", hits[0]}, toy.lexicon, toy.vectors);
  // s = 5/9; eta from (0.1, 0.9); cos of (0.6,0,0,0.7,0,0.1) and (0.3,0,0,0.9,0,0.1).
  double s = 5.0 / 9.0;
  double eta = std::sqrt(0.4 * 0.4 + 0.45 * 0.45) / (std::sqrt(2.0) / 2.0);
  double cos = 0.82 / (std::sqrt(0.86) * std::sqrt(0.91));
  CHECK(std::abs(t.scaled_confidence - s) < 1e-12);
  CHECK(std::abs(t.emotion_intensity - eta) < 1e-12);
  CHECK(std::abs(t.similarity - cos) < 1e-12);
  CHECK(std::abs(t.final_score - (s + eta + cos)) < 1e-12);
}

TEST_CASE("rendering") {
  std::vector<ScoredTuple> two = {tuple("fear", "IsA", "panic"),
                                  tuple("fear", "RelatedTo", "scared")};
  CHECK(render_concepts(two) == "fear <is a> panic; fear <related to> scared");
  CHECK(render_concepts(two, ConceptSeparator::kComma) ==
        "fear <is a> panic, fear <related to> scared");
  CHECK(render_concepts({}) == "");
  std::vector<ScoredTuple> one = {tuple("blood", "PartOf", "blood cell")};
  CHECK(render_concepts(one) == "blood <part of> blood cell");
}

TEST_CASE("fear and cough context through the whole pipeline") {
  const auto &toy = testing::Toy::get();
  auto set = extract_concepts(kFearContext, toy.store, toy.lexicon, toy.vectors, stop());
  CHECK(set.rendered ==
        "fear <is a> panic; fear <related to> scared; cough <related to> sneeze; "
        "cancer <is a> disease; blood <part of> blood cell");
  REQUIRE(set.tuples.size() == 5);
  // the duplicate fear/IsA/panic edge keeps its more confident copy
  CHECK(set.tuples[0].raw_confidence == 6.0);
}

TEST_CASE("empty results") {
  const auto &toy = testing::Toy::get();
  for (const auto *text : {"", "I am the one and it is so.", "zebra xylophone 42"}) {
    auto set = extract_concepts(text, toy.store, toy.lexicon, toy.vectors, stop());
    CHECK(set.keywords.empty());
    CHECK(set.tuples.empty());
    CHECK(set.rendered.empty());
  }
}

TEST_CASE("limits apply per keyword and per context") {
  KnowledgeStoreBuilder b;
  for (int i = 0; i < 6; ++i) {
    b.add("alpha", "RelatedTo", "a" + std::to_string(i), 2.0 + i);
    b.add("beta", "RelatedTo", "b" + std::to_string(i), 2.0 + i);
    b.add("gamma", "RelatedTo", "c" + std::to_string(i), 2.0 + i);
    b.add("delta", "RelatedTo", "d" + std::to_string(i), 2.0 + i);
  }
  auto store = std::move(b).build();
  VectorStore vectors(2);
  vectors.add("alpha", std::vector<double>{1.0, 0.1});
  vectors.add("beta", std::vector<double>{1.0, 0.2});
  vectors.add("gamma", std::vector<double>{1.0, 0.3});
  vectors.add("delta", std::vector<double>{1.0, 0.4});
  VadLexicon lexicon;
  ConceptExtractor ex(store, lexicon, vectors, stop());
  auto set = ex.extract("alpha beta gamma delta");
  CHECK(set.keywords.size() == 4);
  CHECK(set.tuples.size() == 10);
  std::map<std::string, int> per_keyword;
  for (const auto &t : set.tuples) ++per_keyword[t.keyword];
  for (const auto &[k, n] : per_keyword) CHECK(n <= 3);
  // ties on score break by relation, concept, then keyword rank
  for (std::size_t i = 1; i < set.tuples.size(); ++i) {
    CHECK(set.tuples[i - 1].final_score >= set.tuples[i].final_score);
  }
  CHECK(set.tuples[0].concept_text == "a5");
}

TEST_CASE("raising alpha never adds tuples") {
  const auto &toy = testing::Toy::get();
  std::size_t previous = SIZE_MAX;
  for (double alpha = 0.0; alpha <= 1.0; alpha += 0.05) {
    ExtractorConfig config;
    config.alpha = alpha;
    auto set = extract_concepts(kFearContext, toy.store, toy.lexicon, toy.vectors, stop(), config);
    CHECK(set.tuples.size() <= previous);
    previous = set.tuples.size();
    for (const auto &t : set.tuples) CHECK(t.scaled_confidence >= alpha);
  }
}

TEST_CASE("custom exclusion list") {
  const auto &toy = testing::Toy::get();
  ExtractorConfig config;
  config.excluded_relations = {"IsA"};
  auto set = extract_concepts(kFearContext, toy.store, toy.lexicon, toy.vectors, stop(), config);
  for (const auto &t : set.tuples) CHECK(t.relation.name() != "IsA");
  bool has_antonym = false;
  for (const auto &t : set.tuples) has_antonym |= t.relation.name() == "Antonym";
  CHECK(has_antonym);
}

TEST_CASE("saturated confidences keep their relative order") {
  KnowledgeStoreBuilder b;
  b.add("alpha", "RelatedTo", "xenon", 12.0);
  b.add("alpha", "IsA", "yarn", 15.0);
  auto store = std::move(b).build();
  VectorStore vectors(1);
  vectors.add("alpha", std::vector<double>{1.0});
  VadLexicon lexicon;
  auto set = extract_concepts("alpha", store, lexicon, vectors, stop());
  REQUIRE(set.tuples.size() == 2);
  CHECK(set.tuples[0].final_score == set.tuples[1].final_score);
  CHECK(set.tuples[0].relation.name() == "IsA");
}

TEST_CASE("matches the brute-force oracle on the toy contexts") {
  const auto &toy = testing::Toy::get();
  std::ifstream in(testing::fixture("toy_contexts.jsonl"));
  std::string line;
  std::uint64_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto record = parse_context_record(line, n);
    auto got = extract_concepts(record.text(), toy.store, toy.lexicon, toy.vectors, stop());
    auto want = oracle::extract(record.text(), toy.store, toy.lexicon, toy.vectors, stop());
    CAPTURE(line);
    CHECK(got.rendered == want.rendered);
    REQUIRE(got.tuples.size() == want.tuples.size());
    for (std::size_t i = 0; i < got.tuples.size(); ++i) {
      CHECK(std::abs(got.tuples[i].final_score - want.tuples[i].final_score) < 1e-12);
    }
  }
  CHECK(n == 8);
}

}  // TEST_SUITE
