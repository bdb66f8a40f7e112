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

#ifndef CKECE_METRICS_HPP_
#define CKECE_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ckece {

struct GenerationRecord {
  std::string response_text;
  std::optional<std::vector<double>> token_logprobs;  // natural log, all <= 0
  std::optional<std::string> predicted_emotion;
  std::optional<std::string> gold_emotion;
};

struct DistinctStats {
  std::size_t unique = 0;
  std::size_t total = 0;
  double ratio() const { return total == 0 ? 0.0 : static_cast<double>(unique) / total; }
};

// Corpus-level distinct-n: n-grams pooled over all responses, tokens from
// lowercased whitespace splitting. Throws Error(kInvalidArgument) for n == 0.
DistinctStats distinct_ngrams(std::span<const std::string> responses, std::size_t n);
double distinct_n(std::span<const std::string> responses, std::size_t n);

// Case-insensitive exact-match rate. Throws on a length mismatch or empty input.
double emotion_accuracy(std::span<const std::string> predictions,
                        std::span<const std::string> golds);

// exp(-sum(logprobs) / token_count) over every token of every record.
// Throws on a positive log-probability or when there are no tokens.
double corpus_perplexity(std::span<const std::vector<double>> records);

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace ckece

#endif  // CKECE_METRICS_HPP_
