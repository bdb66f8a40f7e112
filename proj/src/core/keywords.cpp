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

#include "ckece/keywords.hpp"

#include <algorithm>
#include <set>

namespace ckece {

std::vector<Keyword> extract_keywords(std::string_view context, const EmbeddingProvider &provider,
                                      const StopwordSet &stopwords, std::size_t max_keywords) {
  // std::set gives the candidates in token order, which fixes the summation
  // order of the document embedding.
  std::set<std::string> unique;
  for (auto &token : tokenize(context)) {
    if (stopwords.contains(token) || is_numeric_token(token)) continue;
    unique.insert(std::move(token));
  }

  std::vector<std::pair<std::string, Embedding>> candidates;
  for (const auto &token : unique) {
    Embedding e = provider.embed(token);
    if (!e.is_zero) candidates.emplace_back(token, std::move(e));
  }
  if (candidates.empty() || max_keywords == 0) return {};

  std::vector<double> doc(provider.dimension(), 0.0);
  for (const auto &[token, e] : candidates) {
    for (size_t i = 0; i < doc.size(); ++i) doc[i] += e.values[i];
  }
  for (double &x : doc) x /= static_cast<double>(candidates.size());
  Embedding document = Embedding::from(std::move(doc));

  std::vector<Keyword> keywords;
  keywords.reserve(candidates.size());
  for (const auto &[token, e] : candidates) {
    double score = cosine(e, document);
    if (score > 0.0) keywords.push_back({token, score});
  }
  std::sort(keywords.begin(), keywords.end(), [](const Keyword &a, const Keyword &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.token < b.token;
  });
  if (keywords.size() > max_keywords) keywords.resize(max_keywords);
  return keywords;
}

std::vector<Keyword> extract_keywords(std::string_view context, const VectorStore &vectors,
                                      const StopwordSet &stopwords, std::size_t max_keywords) {
  return extract_keywords(context, StaticVectorProvider(vectors), stopwords, max_keywords);
}

}  // namespace ckece
