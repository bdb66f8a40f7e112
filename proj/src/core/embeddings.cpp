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

#include "ckece/embeddings.hpp"

#include <algorithm>
#include <cmath>

#include "ckece/error.hpp"
#include "ckece/io.hpp"

namespace ckece {

Embedding Embedding::from(std::vector<double> values) {
  bool zero = std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
  return {std::move(values), zero};
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "cosine of vectors with dimensions " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  double dot = 0.0, aa = 0.0, bb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  if (aa == 0.0 || bb == 0.0) return 0.0;
  double c = dot / (std::sqrt(aa) * std::sqrt(bb));
  return std::clamp(c, -1.0, 1.0);
}

double cosine(const Embedding &a, const Embedding &b) {
  if (a.dimension() != b.dimension()) return cosine(std::span(a.values), std::span(b.values));
  if (a.is_zero || b.is_zero) return 0.0;
  return cosine(std::span(a.values), std::span(b.values));
}

VectorStore::VectorStore(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw Error(ErrorKind::kInvalidArgument, "vector dimension must be positive");
}

void VectorStore::add(std::string_view token, std::span<const double> values) {
  if (values.size() != dimension_) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(dimension_) + " components, got " +
                    std::to_string(values.size()));
  }
  auto [it, inserted] = index_.try_emplace(std::string(token), index_.size());
  if (!inserted) throw Error(ErrorKind::kInvalidArgument, "duplicate token '" + it->first + "'");
  data_.insert(data_.end(), values.begin(), values.end());
}

VectorStore VectorStore::load(std::istream &in, std::size_t expected_dimension) {
  VectorStore store(expected_dimension);
  std::string line;
  std::uint64_t line_no = 0;
  std::vector<double> row(expected_dimension);
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (trim(view).empty()) continue;

    auto fields = split_whitespace(view);
    if (fields.size() != expected_dimension + 1) {
      throw Error(ErrorKind::kParse,
                  "expected token plus " + std::to_string(expected_dimension) +
                      " components, got " + std::to_string(fields.size() - 1),
                  line_no);
    }
    for (size_t i = 0; i < expected_dimension; ++i) {
      if (!parse_double(fields[i + 1], row[i])) {
        throw Error(ErrorKind::kParse, "non-numeric component '" + std::string(fields[i + 1]) + "'",
                    line_no);
      }
    }
    if (store.contains(fields[0])) {
      throw Error(ErrorKind::kParse, "duplicate token '" + std::string(fields[0]) + "'", line_no);
    }
    store.add(fields[0], row);
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read error while loading vectors");
  return store;
}

bool VectorStore::contains(std::string_view token) const {
  return index_.find(std::string(token)) != index_.end();
}

std::span<const double> VectorStore::lookup(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return {};
  return std::span<const double>(data_).subspan(it->second * dimension_, dimension_);
}

Embedding VectorStore::embed_token(std::string_view token) const {
  auto v = lookup(token);
  if (v.empty()) return Embedding::zero(dimension_);
  return Embedding::from(std::vector<double>(v.begin(), v.end()));
}

Embedding VectorStore::embed_phrase(std::string_view phrase) const {
  std::vector<size_t> rows;
  for (auto token : split_whitespace(phrase)) {
    auto it = index_.find(std::string(token));
    if (it != index_.end()) rows.push_back(it->second);
  }
  if (rows.empty()) return Embedding::zero(dimension_);
  // Summing in row order makes the mean independent of token order, bit for bit.
  std::sort(rows.begin(), rows.end());
  std::vector<double> sum(dimension_, 0.0);
  for (size_t row : rows) {
    const double *v = data_.data() + row * dimension_;
    for (size_t i = 0; i < dimension_; ++i) sum[i] += v[i];
  }
  for (double &x : sum) x /= static_cast<double>(rows.size());
  return Embedding::from(std::move(sum));
}

}  // namespace ckece
