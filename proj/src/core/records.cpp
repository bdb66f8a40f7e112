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

#include "ckece/records.hpp"

#include <sstream>

#include "ckece/error.hpp"
#include "ckece/io.hpp"
#include "ckece/parallel.hpp"

namespace ckece {

using nlohmann::json;

namespace {

json parse_object(std::string_view line, std::uint64_t line_no) {
  json j = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error(ErrorKind::kParse, "invalid JSON", line_no);
  if (!j.is_object()) throw Error(ErrorKind::kParse, "record must be a JSON object", line_no);
  return j;
}

// Non-blank lines with their 1-based line numbers.
struct Lines {
  std::vector<std::string> text;
  std::vector<std::uint64_t> number;
};

// Reads up to `limit` non-blank lines. Returns false at end of input.
bool read_chunk(std::istream &in, std::uint64_t &line_no, std::size_t limit, Lines &chunk) {
  chunk.text.clear();
  chunk.number.clear();
  std::string line;
  while (chunk.text.size() < limit && std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    chunk.text.push_back(std::move(line));
    chunk.number.push_back(line_no);
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read error");
  return !chunk.text.empty();
}

constexpr std::size_t kChunkSize = 4096;

}  // namespace

std::string ContextRecord::text() const {
  std::string out;
  for (const auto &t : turns) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

ContextRecord parse_context_record(std::string_view line, std::uint64_t line_no) {
  json j = parse_object(line, line_no);
  auto it = j.find("context");
  if (it == j.end() || !it->is_array()) {
    throw Error(ErrorKind::kParse, "record needs a \"context\" array of strings", line_no);
  }
  ContextRecord record;
  for (const auto &turn : *it) {
    if (!turn.is_string()) throw Error(ErrorKind::kParse, "context turns must be strings", line_no);
    record.turns.push_back(turn.get<std::string>());
  }
  if (auto id = j.find("id"); id != j.end()) record.id = *id;
  return record;
}

json concept_set_to_json(const ConceptSet &set, const json &id) {
  json out = json::object();
  if (!id.is_null()) out["id"] = id;
  json keywords = json::array();
  for (const auto &k : set.keywords) keywords.push_back({{"token", k.token}, {"score", k.score}});
  json tuples = json::array();
  for (const auto &t : set.tuples) {
    tuples.push_back({{"keyword", t.keyword},
                      {"relation", t.relation.name()},
                      {"concept", t.concept_text},
                      {"raw_confidence", t.raw_confidence},
                      {"scaled_confidence", t.scaled_confidence},
                      {"emotion_intensity", t.emotion_intensity},
                      {"similarity", t.similarity},
                      {"final_score", t.final_score}});
  }
  out["keywords"] = std::move(keywords);
  out["tuples"] = std::move(tuples);
  out["rendered"] = set.rendered;
  return out;
}

json example_to_json(const DialogueExample &example, const FormatOptions &options) {
  DecoderInput decoder = format_decoder_input(example.concepts_rendered, example.target, options);
  return {{"conversation_id", example.conversation_id},
          {"emotion", example.emotion},
          {"encoder_input", format_encoder_input(example.context_turns, options)},
          {"decoder_input", decoder.text},
          {"loss_mask_boundary", decoder.loss_mask_boundary},
          {"concepts_rendered", example.concepts_rendered}};
}

GenerationRecord parse_generation_record(std::string_view line, std::uint64_t line_no) {
  json j = parse_object(line, line_no);
  GenerationRecord r;
  auto optional_string = [&](const char *key) -> std::optional<std::string> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw Error(ErrorKind::kParse, std::string(key) + " must be a string", line_no);
    return it->get<std::string>();
  };
  r.response_text = optional_string("response_text").value_or("");
  r.predicted_emotion = optional_string("predicted_emotion");
  r.gold_emotion = optional_string("gold_emotion");
  if (auto it = j.find("token_logprobs"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw Error(ErrorKind::kParse, "token_logprobs must be an array", line_no);
    std::vector<double> lps;
    lps.reserve(it->size());
    for (const auto &v : *it) {
      if (!v.is_number()) throw Error(ErrorKind::kParse, "token_logprobs must be numbers", line_no);
      double lp = v.get<double>();
      if (lp > 0.0) throw Error(ErrorKind::kParse, "positive log-probability", line_no);
      lps.push_back(lp);
    }
    r.token_logprobs = std::move(lps);
  }
  return r;
}

json generation_record_to_json(const GenerationRecord &record) {
  json j = {{"response_text", record.response_text}};
  if (record.token_logprobs) j["token_logprobs"] = *record.token_logprobs;
  if (record.predicted_emotion) j["predicted_emotion"] = *record.predicted_emotion;
  if (record.gold_emotion) j["gold_emotion"] = *record.gold_emotion;
  return j;
}

std::size_t run_extract_batch(std::istream &in, std::ostream &out,
                              const ConceptExtractor &extractor, std::size_t workers) {
  std::size_t total = 0;
  std::uint64_t line_no = 0;
  Lines chunk;
  std::vector<std::string> rendered;
  while (read_chunk(in, line_no, kChunkSize, chunk)) {
    rendered.assign(chunk.text.size(), {});
    parallel_for(chunk.text.size(), workers, [&](std::size_t i) {
      ContextRecord record = parse_context_record(chunk.text[i], chunk.number[i]);
      rendered[i] = concept_set_to_json(extractor.extract(record.text()), record.id).dump();
    });
    for (const auto &line : rendered) out << line << '\n';
    total += rendered.size();
  }
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failed");
  return total;
}

CorpusRunStats run_corpus(std::istream &csv, std::ostream &out, const ConceptExtractor *extractor,
                          std::size_t workers, const FormatOptions &options) {
  CorpusRunStats stats;
  std::vector<Dialogue> dialogues = load_dialogues(csv, &stats.load);
  std::vector<DialogueExample> examples;
  for (const auto &d : dialogues) {
    for (auto &ex : build_examples(d)) examples.push_back(std::move(ex));
  }
  std::vector<std::string> lines(examples.size());
  parallel_for(examples.size(), workers, [&](std::size_t i) {
    DialogueExample &ex = examples[i];
    if (extractor != nullptr) {
      std::string context;
      for (const auto &t : ex.context_turns) {
        if (!context.empty()) context += ' ';
        context += t;
      }
      ex.concepts_rendered = extractor->extract(context).rendered;
    }
    lines[i] = example_to_json(ex, options).dump();
  });
  for (const auto &line : lines) out << line << '\n';
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failed");
  stats.examples = examples.size();
  return stats;
}

MetricReport evaluate_records(std::istream &in, Metric metric, std::size_t n) {
  MetricReport report;
  report.metric = metric;
  report.n = n;
  std::vector<std::string> responses, predicted, gold;
  std::vector<std::vector<double>> logprobs;

  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    GenerationRecord r = parse_generation_record(line, line_no);
    ++report.records;
    switch (metric) {
      case Metric::kDistinct:
        responses.push_back(std::move(r.response_text));
        break;
      case Metric::kAccuracy:
        if (!r.predicted_emotion || !r.gold_emotion) {
          throw Error(ErrorKind::kParse, "record needs predicted_emotion and gold_emotion", line_no);
        }
        predicted.push_back(std::move(*r.predicted_emotion));
        gold.push_back(std::move(*r.gold_emotion));
        break;
      case Metric::kPerplexity:
        if (!r.token_logprobs) throw Error(ErrorKind::kParse, "record needs token_logprobs", line_no);
        logprobs.push_back(std::move(*r.token_logprobs));
        break;
    }
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read error");

  switch (metric) {
    case Metric::kDistinct: {
      DistinctStats s = distinct_ngrams(responses, n);
      report.unique = s.unique;
      report.total = s.total;
      report.value = s.ratio();
      report.percent = 100.0 * report.value;
      break;
    }
    case Metric::kAccuracy: {
      report.value = emotion_accuracy(predicted, gold);
      report.total = predicted.size();
      for (size_t i = 0; i < predicted.size(); ++i) {
        report.unique += to_lower(trim(predicted[i])) == to_lower(trim(gold[i]));
      }
      report.percent = 100.0 * report.value;
      break;
    }
    case Metric::kPerplexity: {
      report.value = corpus_perplexity(logprobs);
      for (const auto &r : logprobs) report.total += r.size();
      report.percent = report.value;
      break;
    }
  }
  return report;
}

std::string format_report(const MetricReport &report, bool as_json) {
  json j = json::object();
  std::vector<std::pair<std::string, std::string>> kv;
  switch (report.metric) {
    case Metric::kDistinct: {
      std::string key = "distinct_" + std::to_string(report.n);
      j = {{"metric", "distinct-" + std::to_string(report.n)},
           {key, report.value},
           {key + "_percent", report.percent},
           {"unique_ngrams", report.unique},
           {"total_ngrams", report.total},
           {"responses", report.records}};
      kv = {{"metric", "distinct-" + std::to_string(report.n)},
            {key, format_number(report.value)},
            {key + "_percent", format_number(report.percent)},
            {"unique_ngrams", std::to_string(report.unique)},
            {"total_ngrams", std::to_string(report.total)},
            {"responses", std::to_string(report.records)}};
      break;
    }
    case Metric::kAccuracy:
      j = {{"metric", "emotion_accuracy"},
           {"emotion_accuracy", report.value},
           {"emotion_accuracy_percent", report.percent},
           {"matches", report.unique},
           {"labels", report.total}};
      kv = {{"metric", "emotion_accuracy"},
            {"emotion_accuracy", format_number(report.value)},
            {"emotion_accuracy_percent", format_number(report.percent)},
            {"matches", std::to_string(report.unique)},
            {"labels", std::to_string(report.total)}};
      break;
    case Metric::kPerplexity:
      j = {{"metric", "perplexity"},
           {"perplexity", report.value},
           {"tokens", report.total},
           {"records", report.records}};
      kv = {{"metric", "perplexity"},
            {"perplexity", format_number(report.value)},
            {"tokens", std::to_string(report.total)},
            {"records", std::to_string(report.records)}};
      break;
  }
  if (as_json) return j.dump() + "\n";
  std::string out;
  for (const auto &[k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

}  // namespace ckece
