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

#ifndef CKECE_TESTS_ORACLE_HPP_
#define CKECE_TESTS_ORACLE_HPP_

#include <string>
#include <string_view>

#include "ckece/extractor.hpp"

namespace oracle {

// Brute-force reimplementation of the extraction pipeline. Scans every
// assertion for every keyword and recomputes all scores from first
// principles. Shares only the data containers and the stemmer with the
// library.
ckece::ConceptSet extract(std::string_view context, const ckece::KnowledgeStore &store,
                          const ckece::VadLexicon &lexicon, const ckece::VectorStore &vectors,
                          const ckece::StopwordSet &stopwords,
                          const ckece::ExtractorConfig &config = {},
                          std::string_view separator = "; ");

double scale(double raw);
double intensity(double valence, double arousal);

}  // namespace oracle

#endif  // CKECE_TESTS_ORACLE_HPP_
