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

#ifndef CKECE_LEXICON_HPP_
#define CKECE_LEXICON_HPP_

#include <cstddef>
#include <istream>
#include <numbers>
#include <string>
#include <string_view>
#include <unordered_map>

namespace ckece {

// One NRC_VAD row. Dominance is kept for completeness; the intensity score
// reads only valence and arousal.
struct VadEntry {
  std::string word;
  double valence = 0.0;
  double arousal = 0.0;
  double dominance = 0.0;
};

// Closed interval used for min-max scaling. Construction enforces min < max.
class NormalizationBounds {
 public:
  constexpr NormalizationBounds(double min, double max) : min_(min), max_(max) {
    if (!(min < max)) throw_invalid();
  }
  constexpr double min() const { return min_; }
  constexpr double max() const { return max_; }

 private:
  [[noreturn]] static void throw_invalid();
  double min_;
  double max_;
};

// ConceptNet confidence range.
inline constexpr NormalizationBounds kConfidenceBounds{1.0, 10.0};
// Range of |(valence - 1/2, arousal / 2)| over the unit square.
inline constexpr NormalizationBounds kIntensityBounds{0.0, std::numbers::sqrt2 / 2.0};
// Intensity assigned to concepts missing from the lexicon.
inline constexpr double kUnknownIntensity = 0.5;

// (value - min) / (max - min), with value clamped into [min, max] first.
double min_max_scale(double value, const NormalizationBounds &bounds);

// Immutable word -> VAD table.
class VadLexicon {
 public:
  VadLexicon() = default;

  // Reads the tab-separated NRC_VAD layout (header row, then
  // word/valence/arousal/dominance). Throws Error(kParse) naming the line on
  // malformed rows, scores outside [0,1] and duplicate words.
  static VadLexicon load(std::istream &in);

  const VadEntry *find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

  // Min-max scaled |(V - 1/2, A / 2)|_2 for an in-lexicon concept, else 0.5.
  // The concept is looked up as a whole string.
  double emotion_intensity(std::string_view term) const;

 private:
  std::unordered_map<std::string, VadEntry> entries_;
};

// Intensity of a single entry, independent of any lexicon.
double emotion_intensity(const VadEntry &entry);

}  // namespace ckece

#endif  // CKECE_LEXICON_HPP_
