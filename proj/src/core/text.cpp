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

#include "ckece/text.hpp"

#include <cctype>
#include <sstream>

#include "ckece/error.hpp"
#include "ckece/io.hpp"

namespace ckece {
namespace detail {
extern const std::string_view kBundledStopwords;
}  // namespace detail

namespace {
bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }
}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  for (auto raw : split_whitespace(text)) {
    while (!raw.empty() && is_punct(raw.front())) raw.remove_prefix(1);
    while (!raw.empty() && is_punct(raw.back())) raw.remove_suffix(1);
    if (!raw.empty()) tokens.push_back(to_lower(raw));
  }
  return tokens;
}

bool is_numeric_token(std::string_view token) {
  bool digit = false;
  for (char c : token) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != '.' && c != ',' && c != '-' && c != '+') {
      return false;
    }
  }
  return digit;
}

StopwordSet StopwordSet::load(std::istream &in) {
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    words.insert(to_lower(word));
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read error while loading stop words");
  if (words.empty()) throw Error(ErrorKind::kParse, "stop-word list is empty");
  return StopwordSet(std::move(words));
}

const StopwordSet &StopwordSet::bundled() {
  static const StopwordSet set = [] {
    std::istringstream in{std::string(detail::kBundledStopwords)};
    return load(in);
  }();
  return set;
}

}  // namespace ckece
