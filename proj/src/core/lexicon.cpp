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

#include "ckece/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ckece/error.hpp"
#include "ckece/io.hpp"

namespace ckece {

void NormalizationBounds::throw_invalid() {
  throw Error(ErrorKind::kInvalidArgument, "normalization bounds require min < max");
}

double min_max_scale(double value, const NormalizationBounds &bounds) {
  double clamped = std::clamp(value, bounds.min(), bounds.max());
  return (clamped - bounds.min()) / (bounds.max() - bounds.min());
}

double emotion_intensity(const VadEntry &entry) {
  double norm = std::hypot(entry.valence - 0.5, entry.arousal / 2.0);
  return min_max_scale(norm, kIntensityBounds);
}

VadLexicon VadLexicon::load(std::istream &in) {
  VadLexicon lexicon;
  std::string line;
  std::uint64_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      const std::string lowered = to_lower(line);
      auto header = split(lowered, '\t');
      if (header.size() != 4 || trim(header[0]) != "word" || trim(header[1]) != "valence" ||
          trim(header[2]) != "arousal" || trim(header[3]) != "dominance") {
        throw Error(ErrorKind::kParse,
                    "expected header word\\tvalence\\tarousal\\tdominance", line_no);
      }
      header_seen = true;
      continue;
    }
    if (trim(line).empty()) continue;

    auto fields = split(line, '\t');
    if (fields.size() != 4) {
      throw Error(ErrorKind::kParse,
                  "expected 4 tab-separated columns, got " + std::to_string(fields.size()),
                  line_no);
    }
    VadEntry entry;
    entry.word = to_lower(trim(fields[0]));
    if (entry.word.empty()) throw Error(ErrorKind::kParse, "empty word", line_no);

    double *slots[] = {&entry.valence, &entry.arousal, &entry.dominance};
    static constexpr const char *kNames[] = {"valence", "arousal", "dominance"};
    for (int i = 0; i < 3; ++i) {
      auto text = trim(fields[i + 1]);
      if (!parse_double(text, *slots[i])) {
        throw Error(ErrorKind::kParse,
                    std::string("non-numeric ") + kNames[i] + " '" + std::string(text) + "'",
                    line_no);
      }
      if (*slots[i] < 0.0 || *slots[i] > 1.0) {
        throw Error(ErrorKind::kParse,
                    std::string(kNames[i]) + " " + std::string(text) + " outside [0,1]",
                    line_no);
      }
    }
    std::string key = entry.word;
    auto [it, inserted] = lexicon.entries_.try_emplace(std::move(key), std::move(entry));
    if (!inserted) {
      throw Error(ErrorKind::kParse, "duplicate word '" + it->first + "'", line_no);
    }
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read error while loading lexicon");
  if (!header_seen) throw Error(ErrorKind::kParse, "missing header row", 1);
  return lexicon;
}

const VadEntry *VadLexicon::find(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  return it == entries_.end() ? nullptr : &it->second;
}

double VadLexicon::emotion_intensity(std::string_view term) const {
  const VadEntry *entry = find(term);
  if (entry == nullptr) return kUnknownIntensity;
  return ckece::emotion_intensity(*entry);
}

}  // namespace ckece
