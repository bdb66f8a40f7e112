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

#ifndef CKECE_EMBEDDINGS_HPP_
#define CKECE_EMBEDDINGS_HPP_

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ckece {

struct Embedding {
  std::vector<double> values;
  bool is_zero = true;

  static Embedding zero(std::size_t dimension) { return {std::vector<double>(dimension, 0.0), true}; }
  static Embedding from(std::vector<double> values);
  std::size_t dimension() const { return values.size(); }
};

// dot(a, b) / (|a| |b|); 0.0 when either vector has zero norm.
// Throws Error(kInvalidArgument) on a dimension mismatch.
double cosine(const Embedding &a, const Embedding &b);
double cosine(std::span<const double> a, std::span<const double> b);

// Static word-vector table ("token v1 ... vD" per line), immutable after load.
class VectorStore {
 public:
  VectorStore() = default;
  explicit VectorStore(std::size_t dimension);

  // Throws Error(kParse) naming the line on a wrong component count,
  // non-numeric component or duplicate token.
  static VectorStore load(std::istream &in, std::size_t expected_dimension);

  // Adds one vector; used by load and by tests building toy tables.
  void add(std::string_view token, std::span<const double> values);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }
  bool contains(std::string_view token) const;

  // The stored vector, or an empty span when the token is unknown.
  std::span<const double> lookup(std::string_view token) const;

  // Exact-match lookup; unknown tokens (including case variants) embed to zero.
  Embedding embed_token(std::string_view token) const;

  // Mean of the in-vocabulary token vectors of a space-separated phrase.
  Embedding embed_phrase(std::string_view phrase) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<double> data_;
  std::unordered_map<std::string, std::size_t> index_;  // token -> row
};

}  // namespace ckece

#endif  // CKECE_EMBEDDINGS_HPP_
