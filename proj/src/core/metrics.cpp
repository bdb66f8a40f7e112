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

#include "ckece/metrics.hpp"

#include <cmath>
#include <unordered_set>

#include "ckece/error.hpp"
#include "ckece/io.hpp"

namespace ckece {

void CompensatedSum::add(double x) {
  double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

DistinctStats distinct_ngrams(std::span<const std::string> responses, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "distinct-n requires n >= 1");
  DistinctStats stats;
  std::unordered_set<std::string> seen;
  for (const auto &response : responses) {
    std::string lowered = to_lower(response);
    auto tokens = split_whitespace(lowered);
    if (tokens.size() < n) continue;
    for (size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string key(tokens[i]);
      for (size_t j = 1; j < n; ++j) {
        key += ' ';
        key += tokens[i + j];
      }
      seen.insert(std::move(key));
      ++stats.total;
    }
  }
  stats.unique = seen.size();
  return stats;
}

double distinct_n(std::span<const std::string> responses, std::size_t n) {
  return distinct_ngrams(responses, n).ratio();
}

double emotion_accuracy(std::span<const std::string> predictions,
                        std::span<const std::string> golds) {
  if (predictions.size() != golds.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "prediction and gold label counts differ (" + std::to_string(predictions.size()) +
                    " vs " + std::to_string(golds.size()) + ")");
  }
  if (predictions.empty()) throw Error(ErrorKind::kInvalidArgument, "no labels to compare");
  size_t hits = 0;
  for (size_t i = 0; i < predictions.size(); ++i) {
    hits += to_lower(trim(predictions[i])) == to_lower(trim(golds[i]));
  }
  return static_cast<double>(hits) / static_cast<double>(predictions.size());
}

double corpus_perplexity(std::span<const std::vector<double>> records) {
  CompensatedSum nll;
  size_t tokens = 0;
  for (size_t r = 0; r < records.size(); ++r) {
    for (double lp : records[r]) {
      if (!(lp <= 0.0)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "record " + std::to_string(r + 1) + " has a positive or NaN log-probability");
      }
      nll.add(-lp);
      ++tokens;
    }
  }
  if (tokens == 0) throw Error(ErrorKind::kInvalidArgument, "perplexity needs at least one token");
  return std::exp(nll.value() / static_cast<double>(tokens));
}

}  // namespace ckece
