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

#ifndef CKECE_RECORDS_HPP_
#define CKECE_RECORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ckece/corpus.hpp"
#include "ckece/extractor.hpp"
#include "ckece/metrics.hpp"

namespace ckece {

// Line-delimited JSON records exchanged by the batch commands.

// Input of batch extraction: {"context": ["turn", ...], "id": <any, optional>}.
struct ContextRecord {
  nlohmann::json id;  // null when absent; echoed back unchanged
  std::vector<std::string> turns;
  std::string text() const;  // turns joined with single spaces
};
ContextRecord parse_context_record(std::string_view line, std::uint64_t line_no);

// {"id"?, "keywords": [...], "tuples": [...], "rendered": "..."}
nlohmann::json concept_set_to_json(const ConceptSet &set, const nlohmann::json &id = nullptr);

// {"conversation_id", "emotion", "encoder_input", "decoder_input",
//  "loss_mask_boundary", "concepts_rendered"}
nlohmann::json example_to_json(const DialogueExample &example, const FormatOptions &options);

// {"response_text", "token_logprobs"?, "predicted_emotion"?, "gold_emotion"?}
GenerationRecord parse_generation_record(std::string_view line, std::uint64_t line_no);
nlohmann::json generation_record_to_json(const GenerationRecord &record);

// Extracts concepts for every non-blank input line and writes one output
// line per input record, in input order, whatever the worker count.
// Returns the number of records.
std::size_t run_extract_batch(std::istream &in, std::ostream &out,
                              const ConceptExtractor &extractor, std::size_t workers);

struct CorpusRunStats {
  CorpusLoadStats load;
  std::size_t examples = 0;
};

// Dataset split -> model-ready example records. `extractor` may be null, in
// which case every example carries an empty concept string.
CorpusRunStats run_corpus(std::istream &csv, std::ostream &out, const ConceptExtractor *extractor,
                          std::size_t workers, const FormatOptions &options = {});

enum class Metric { kDistinct, kAccuracy, kPerplexity };

struct MetricReport {
  Metric metric = Metric::kDistinct;
  std::size_t n = 0;  // distinct-n order
  double value = 0.0;
  double percent = 0.0;
  std::size_t records = 0;
  std::size_t unique = 0;  // distinct: unique n-grams; accuracy: matches
  std::size_t total = 0;   // distinct: n-grams; accuracy: labels; ppl: tokens
};

// Evaluates a generation-record file. Records missing the fields the metric
// needs are a parse error naming the line.
MetricReport evaluate_records(std::istream &in, Metric metric, std::size_t n = 1);

std::string format_report(const MetricReport &report, bool json);

}  // namespace ckece

#endif  // CKECE_RECORDS_HPP_
