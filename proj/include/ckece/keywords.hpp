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

#ifndef CKECE_KEYWORDS_HPP_
#define CKECE_KEYWORDS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ckece/embeddings.hpp"
#include "ckece/text.hpp"

namespace ckece {

struct Keyword {
  std::string token;
  double score = 0.0;  // cosine to the document embedding

  friend bool operator==(const Keyword &, const Keyword &) = default;
};

// Source of embeddings for keyword candidates and the document. A
// sentence-encoder backend can be plugged in behind this interface.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::size_t dimension() const = 0;
  virtual Embedding embed(std::string_view text) const = 0;
};

// Mean-pooled static word vectors.
class StaticVectorProvider final : public EmbeddingProvider {
 public:
  explicit StaticVectorProvider(const VectorStore &vectors) : vectors_(vectors) {}
  std::size_t dimension() const override { return vectors_.dimension(); }
  Embedding embed(std::string_view text) const override { return vectors_.embed_phrase(text); }

 private:
  const VectorStore &vectors_;
};

inline constexpr std::size_t kDefaultMaxKeywords = 10;

// Ranks the unique non-stopword, non-numeric tokens of `context` that have a
// nonzero embedding by cosine similarity to the mean of those candidate
// embeddings. Descending score, ties by token; at most `max_keywords`, and
// only positive scores survive.
std::vector<Keyword> extract_keywords(std::string_view context, const EmbeddingProvider &provider,
                                      const StopwordSet &stopwords,
                                      std::size_t max_keywords = kDefaultMaxKeywords);

std::vector<Keyword> extract_keywords(std::string_view context, const VectorStore &vectors,
                                      const StopwordSet &stopwords,
                                      std::size_t max_keywords = kDefaultMaxKeywords);

}  // namespace ckece

#endif  // CKECE_KEYWORDS_HPP_
