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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ckece/ckece.h"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

// Non-success C API status escaping a command.
struct ApiFailure {
  ckece_status status;
};

void check(ckece_status status) {
  if (status != CKECE_OK) throw ApiFailure{status};
}

template <typename T, void (*Free)(T *)>
struct Deleter {
  void operator()(T *p) const { Free(p); }
};

using Lexicon = std::unique_ptr<ckece_lexicon, Deleter<ckece_lexicon, ckece_lexicon_free>>;
using Store = std::unique_ptr<ckece_store, Deleter<ckece_store, ckece_store_free>>;
using Vectors = std::unique_ptr<ckece_vectors, Deleter<ckece_vectors, ckece_vectors_free>>;
using Stopwords = std::unique_ptr<ckece_stopwords, Deleter<ckece_stopwords, ckece_stopwords_free>>;
using Extractor = std::unique_ptr<ckece_extractor, Deleter<ckece_extractor, ckece_extractor_free>>;
using CString = std::unique_ptr<char, Deleter<char, ckece_string_free>>;

bool looks_gzipped(const std::string &path) {
  return path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

struct ExtractFlags {
  std::string store;
  std::string vad;
  std::string vectors;
  std::size_t dim = 300;
  std::string stopwords;
  double alpha = 0.1;
  unsigned max_tuples = 10;
  unsigned tuples_per_keyword = 3;
  unsigned max_keywords = 10;
  std::string exclude;
  bool exclude_set = false;
  bool comma = false;
};

void add_extract_flags(CLI::App *cmd, ExtractFlags &f, bool required) {
  auto *store = cmd->add_option("--store", f.store, "binary knowledge store from `ingest`")
                    ->check(CLI::ExistingFile);
  auto *vad = cmd->add_option("--vad", f.vad, "VAD lexicon (word valence arousal dominance)")
                  ->check(CLI::ExistingFile);
  auto *vectors = cmd->add_option("--vectors", f.vectors, "word vectors, one \"token v1 .. vD\" per line")
                      ->check(CLI::ExistingFile);
  if (required) {
    store->required();
    vad->required();
    vectors->required();
  } else {
    store->needs(vad)->needs(vectors);
    vad->needs(store)->needs(vectors);
    vectors->needs(store)->needs(vad);
  }
  cmd->add_option("--dim", f.dim, "vector dimension")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--stopwords", f.stopwords, "stop-word list (default: bundled English list)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--alpha", f.alpha, "minimum scaled confidence")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--max-tuples", f.max_tuples, "tuples kept per context")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tuples-per-keyword", f.tuples_per_keyword, "tuples kept per keyword")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-keywords", f.max_keywords, "keywords kept per context")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--exclude-relations", f.exclude,
                  "comma-separated relations to drop (replaces the default list)");
  cmd->add_flag("--comma-separator", f.comma, "join rendered concepts with \", \"");
}

Extractor make_extractor(const ExtractFlags &f) {
  ckece_store *store_raw = nullptr;
  check(ckece_store_load(f.store.c_str(), &store_raw));
  Store store(store_raw);

  ckece_lexicon *lexicon_raw = nullptr;
  check(ckece_lexicon_load(f.vad.c_str(), &lexicon_raw));
  Lexicon lexicon(lexicon_raw);

  ckece_vectors *vectors_raw = nullptr;
  check(ckece_vectors_load(f.vectors.c_str(), f.dim, looks_gzipped(f.vectors), &vectors_raw));
  Vectors vectors(vectors_raw);

  ckece_stopwords *stop_raw = nullptr;
  check(ckece_stopwords_load(f.stopwords.empty() ? nullptr : f.stopwords.c_str(), &stop_raw));
  Stopwords stopwords(stop_raw);

  ckece_extractor_config config;
  ckece_extractor_config_init(&config);
  config.alpha = f.alpha;
  config.tuples_per_context = f.max_tuples;
  config.tuples_per_keyword = f.tuples_per_keyword;
  config.max_keywords = f.max_keywords;
  config.comma_separator = f.comma ? 1 : 0;
  if (f.exclude_set) config.excluded_relations = f.exclude.c_str();

  ckece_extractor *ex = nullptr;
  check(ckece_extractor_create(store.get(), lexicon.get(), vectors.get(), stopwords.get(), &config,
                               &ex));
  return Extractor(ex);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Commonsense knowledge and emotional concept extraction"};
  app.set_version_flag("--version", ckece_version());
  app.require_subcommand(1);

  // ingest
  std::string ingest_input, ingest_output, ingest_lang = "en";
  bool ingest_strict = false, ingest_gzip = false;
  auto *ingest = app.add_subcommand("ingest", "Build a binary knowledge store from an assertion dump");
  ingest->add_option("--input", ingest_input, "tab-separated assertion dump (\"-\" for stdin)")
      ->required();
  ingest->add_option("--output", ingest_output, "binary store to write")->required();
  ingest->add_option("--lang", ingest_lang, "language to keep")->capture_default_str();
  ingest->add_flag("--strict", ingest_strict, "fail on the first malformed line");
  ingest->add_flag("--gzip", ingest_gzip, "input is gzip-compressed (implied by a .gz suffix)");

  // extract
  ExtractFlags extract_flags;
  std::string extract_input, extract_output = "-";
  unsigned extract_workers = 1;
  auto *extract = app.add_subcommand("extract", "Extract concepts for JSON-lines contexts");
  add_extract_flags(extract, extract_flags, true);
  extract->add_option("--input", extract_input, "contexts, one {\"context\": [...]} per line")
      ->required();
  extract->add_option("--output", extract_output, "results file (default stdout)");
  extract->add_option("--workers", extract_workers, "worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  // process-corpus
  ExtractFlags corpus_flags;
  std::string dataset_dir, split, corpus_output = "-";
  unsigned corpus_workers = 1;
  bool no_lowercase = false;
  auto *corpus = app.add_subcommand("process-corpus", "Turn a dataset split into model-ready records");
  corpus->add_option("--dataset-dir", dataset_dir, "directory holding <split>.csv")
      ->required()
      ->check(CLI::ExistingDirectory);
  corpus->add_option("--split", split, "split name: train, valid or test")->required();
  add_extract_flags(corpus, corpus_flags, false);
  corpus->add_option("--output", corpus_output, "records file (default stdout)");
  corpus->add_option("--workers", corpus_workers, "worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  corpus->add_flag("--no-lowercase", no_lowercase, "keep the original casing of model-facing text");

  // eval
  std::string eval_input, eval_format = "kv";
  unsigned distinct_n = 1;
  auto *eval = app.add_subcommand("eval", "Score generation records");
  eval->require_subcommand(1);
  auto add_eval_common = [&](CLI::App *cmd) {
    cmd->add_option("--input", eval_input, "generation records, JSON lines (\"-\" for stdin)")
        ->required();
    cmd->add_option("--format", eval_format, "report format")
        ->capture_default_str()
        ->check(CLI::IsMember({"kv", "json"}));
  };
  auto *eval_distinct = eval->add_subcommand("distinct", "Corpus-level distinct-n");
  eval_distinct->add_option("--n", distinct_n, "n-gram order")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_eval_common(eval_distinct);
  auto *eval_accuracy = eval->add_subcommand("accuracy", "Emotion label accuracy");
  add_eval_common(eval_accuracy);
  auto *eval_ppl = eval->add_subcommand("ppl", "Token-weighted corpus perplexity");
  add_eval_common(eval_ppl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  extract_flags.exclude_set = extract->count("--exclude-relations") > 0;
  corpus_flags.exclude_set = corpus->count("--exclude-relations") > 0;

  try {
    if (*ingest) {
      auto start = std::chrono::steady_clock::now();
      ckece_ingest_options options;
      ckece_ingest_options_init(&options);
      options.language = ingest_lang.c_str();
      options.strict = ingest_strict;
      options.gzip = ingest_gzip || looks_gzipped(ingest_input);
      ckece_store *raw = nullptr;
      ckece_ingest_stats stats{};
      check(ckece_store_ingest(ingest_input.c_str(), &options, &raw, &stats));
      Store store(raw);
      check(ckece_store_save(store.get(), ingest_output.c_str()));
      std::fprintf(stderr,
                   "lines=%llu\nassertions=%llu\nconcepts=%llu\nlanguage_filtered=%llu\n"
                   "malformed=%llu\nmissing_weight=%llu\nelapsed_s=%.3f\n",
                   static_cast<unsigned long long>(stats.lines),
                   static_cast<unsigned long long>(stats.assertions),
                   static_cast<unsigned long long>(stats.concepts),
                   static_cast<unsigned long long>(stats.language_filtered),
                   static_cast<unsigned long long>(stats.malformed),
                   static_cast<unsigned long long>(stats.missing_weight), seconds_since(start));
    } else if (*extract) {
      Extractor ex = make_extractor(extract_flags);
      std::uint64_t records = 0;
      check(ckece_extract_batch(ex.get(), extract_input.c_str(), extract_output.c_str(),
                                extract_workers, &records));
      std::fprintf(stderr, "records=%llu\n", static_cast<unsigned long long>(records));
    } else if (*corpus) {
      Extractor ex;
      if (!corpus_flags.store.empty()) ex = make_extractor(corpus_flags);
      std::string csv = (std::filesystem::path(dataset_dir) / (split + ".csv")).string();
      if (!std::filesystem::is_regular_file(csv)) {
        std::cerr << "error: no such split file: " << csv << "\n";
        return kExitUsage;
      }
      ckece_corpus_stats stats{};
      check(ckece_corpus_process(csv.c_str(), ex.get(), corpus_output.c_str(), corpus_workers,
                                 no_lowercase ? 0 : 1, &stats));
      std::fprintf(stderr, "rows=%llu\ndialogues=%llu\nskipped_conversations=%llu\nexamples=%llu\n",
                   static_cast<unsigned long long>(stats.rows),
                   static_cast<unsigned long long>(stats.dialogues),
                   static_cast<unsigned long long>(stats.skipped_conversations),
                   static_cast<unsigned long long>(stats.examples));
    } else if (*eval) {
      ckece_metric metric = *eval_distinct  ? CKECE_METRIC_DISTINCT
                            : *eval_accuracy ? CKECE_METRIC_ACCURACY
                                             : CKECE_METRIC_PERPLEXITY;
      char *report_raw = nullptr;
      check(ckece_eval_file(eval_input.c_str(), metric, distinct_n, eval_format == "json",
                            nullptr, &report_raw));
      CString report(report_raw);
      std::cout << report.get();
      std::cout.flush();
    }
  } catch (const ApiFailure &f) {
    std::cerr << "error: " << ckece_last_error() << "\n";
    return f.status == CKECE_ERR_INVALID_ARGUMENT ? kExitUsage : kExitData;
  }
  return 0;
}
