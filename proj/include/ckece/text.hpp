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

#ifndef CKECE_TEXT_HPP_
#define CKECE_TEXT_HPP_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ckece {

// Lowercase, split on whitespace, strip leading/trailing ASCII punctuation,
// drop empty tokens. Inner punctuation ("don't", "e-mail") is kept.
std::vector<std::string> tokenize(std::string_view text);

// Digits plus optional sign/decimal/grouping characters, e.g. "3", "2,000", "-1.5".
bool is_numeric_token(std::string_view token);

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  // One token per line; blank lines and lines starting with '#' are ignored.
  // Throws Error(kParse) when no words remain.
  static StopwordSet load(std::istream &in);

  // Union of the NLTK and spaCy English lists, compiled into the library.
  static const StopwordSet &bundled();

  bool contains(std::string_view token) const { return words_.count(std::string(token)) != 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Porter (1980) suffix-stripping stemmer, original rule set. Input must be
// lowercase ASCII; words of one or two letters are returned unchanged.
std::string porter_stem(std::string_view word);

inline constexpr std::string_view kStemmerVersion = "porter-1980/1";

// Stems each whitespace-separated token and rejoins with single spaces.
std::string stem_phrase(std::string_view phrase);

// True when both phrases have the same stem sequence.
bool stems_equal(std::string_view a, std::string_view b);

}  // namespace ckece

#endif  // CKECE_TEXT_HPP_
