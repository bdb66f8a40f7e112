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

#include "ckece/ckece.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "ckece/corpus.hpp"
#include "ckece/embeddings.hpp"
#include "ckece/error.hpp"
#include "ckece/extractor.hpp"
#include "ckece/io.hpp"
#include "ckece/knowledge_store.hpp"
#include "ckece/lexicon.hpp"
#include "ckece/metrics.hpp"
#include "ckece/records.hpp"
#include "ckece/text.hpp"

struct ckece_lexicon {
  std::shared_ptr<const ckece::VadLexicon> impl;
};
struct ckece_store {
  std::shared_ptr<const ckece::KnowledgeStore> impl;
};
struct ckece_vectors {
  std::shared_ptr<const ckece::VectorStore> impl;
};
struct ckece_stopwords {
  std::shared_ptr<const ckece::StopwordSet> impl;
};
struct ckece_extractor {
  std::shared_ptr<const ckece::KnowledgeStore> store;
  std::shared_ptr<const ckece::VadLexicon> lexicon;
  std::shared_ptr<const ckece::VectorStore> vectors;
  std::shared_ptr<const ckece::StopwordSet> stopwords;
  std::unique_ptr<ckece::ConceptExtractor> impl;
};

namespace {

thread_local std::string g_last_error;
thread_local std::uint64_t g_last_error_line = 0;

ckece_status fail(ckece_status status, std::string message, std::uint64_t line = 0) {
  g_last_error = std::move(message);
  g_last_error_line = line;
  return status;
}

ckece_status to_status(ckece::ErrorKind kind) {
  switch (kind) {
    case ckece::ErrorKind::kInvalidArgument: return CKECE_ERR_INVALID_ARGUMENT;
    case ckece::ErrorKind::kIo: return CKECE_ERR_IO;
    case ckece::ErrorKind::kParse: return CKECE_ERR_PARSE;
    case ckece::ErrorKind::kFormat: return CKECE_ERR_FORMAT;
  }
  return CKECE_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Fn>
ckece_status guarded(Fn &&body) {
  g_last_error.clear();
  g_last_error_line = 0;
  try {
    body();
    return CKECE_OK;
  } catch (const ckece::Error &e) {
    return fail(to_status(e.kind()), e.what(), e.line());
  } catch (const std::bad_alloc &) {
    return fail(CKECE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(CKECE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CKECE_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char *what) {
  if (!condition) throw ckece::Error(ckece::ErrorKind::kInvalidArgument, what);
}

char *dup_string(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::vector<std::string> to_strings(const char *const *items, size_t count, const char *what) {
  require(count == 0 || items != nullptr, what);
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    require(items[i] != nullptr, what);
    out.emplace_back(items[i]);
  }
  return out;
}

}  // namespace

extern "C" {

const char *ckece_version(void) { return CKECE_VERSION_STRING; }
const char *ckece_last_error(void) { return g_last_error.c_str(); }
uint64_t ckece_last_error_line(void) { return g_last_error_line; }
void ckece_string_free(char *str) { std::free(str); }

ckece_status ckece_min_max_scale(double value, double min, double max, double *out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = ckece::min_max_scale(value, ckece::NormalizationBounds(min, max));
  });
}

// ---- lexicon ---------------------------------------------------------------

ckece_status ckece_lexicon_load(const char *path, ckece_lexicon **out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "path and out must not be NULL");
    auto in = ckece::open_input(path);
    auto lexicon = std::make_shared<const ckece::VadLexicon>(ckece::VadLexicon::load(*in));
    *out = new ckece_lexicon{std::move(lexicon)};
  });
}

void ckece_lexicon_free(ckece_lexicon *lexicon) { delete lexicon; }

size_t ckece_lexicon_size(const ckece_lexicon *lexicon) {
  return lexicon != nullptr ? lexicon->impl->size() : 0;
}

ckece_status ckece_lexicon_lookup(const ckece_lexicon *lexicon, const char *word, int *found,
                                  double *valence, double *arousal, double *dominance) {
  return guarded([&] {
    require(lexicon != nullptr && word != nullptr && found != nullptr, "NULL argument");
    const ckece::VadEntry *e = lexicon->impl->find(word);
    *found = e != nullptr;
    if (e == nullptr) return;
    if (valence) *valence = e->valence;
    if (arousal) *arousal = e->arousal;
    if (dominance) *dominance = e->dominance;
  });
}

ckece_status ckece_lexicon_emotion_intensity(const ckece_lexicon *lexicon, const char *term,
                                             double *out) {
  return guarded([&] {
    require(lexicon != nullptr && term != nullptr && out != nullptr, "NULL argument");
    *out = lexicon->impl->emotion_intensity(term);
  });
}

// ---- store -----------------------------------------------------------------

void ckece_ingest_options_init(ckece_ingest_options *options) {
  if (options == nullptr) return;
  options->language = "en";
  options->strict = 0;
  options->gzip = 0;
}

ckece_status ckece_store_ingest(const char *path, const ckece_ingest_options *options,
                                ckece_store **out, ckece_ingest_stats *stats) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "path and out must not be NULL");
    ckece::IngestOptions opts;
    bool gzip = false;
    if (options != nullptr) {
      if (options->language != nullptr) opts.language = options->language;
      opts.strict = options->strict != 0;
      gzip = options->gzip != 0;
    }
    require(!opts.language.empty(), "language must not be empty");
    auto in = ckece::open_input(path, gzip);
    ckece::IngestStats s;
    auto store =
        std::make_shared<const ckece::KnowledgeStore>(ckece::KnowledgeStore::ingest(*in, opts, &s));
    if (stats != nullptr) {
      *stats = {s.lines, s.kept, store->concept_count(), s.language_filtered, s.malformed,
                s.missing_weight};
    }
    *out = new ckece_store{std::move(store)};
  });
}

ckece_status ckece_store_save(const ckece_store *store, const char *path) {
  return guarded([&] {
    require(store != nullptr && path != nullptr, "NULL argument");
    auto os = ckece::open_output(path, /*binary=*/true);
    store->impl->save(*os);
    os->flush();
    if (!*os) throw ckece::Error(ckece::ErrorKind::kIo, std::string("failed writing ") + path);
  });
}

ckece_status ckece_store_load(const char *path, ckece_store **out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "path and out must not be NULL");
    auto in = ckece::open_binary_input(path);
    auto store = std::make_shared<const ckece::KnowledgeStore>(ckece::KnowledgeStore::load(*in));
    *out = new ckece_store{std::move(store)};
  });
}

void ckece_store_free(ckece_store *store) { delete store; }

uint64_t ckece_store_assertion_count(const ckece_store *store) {
  return store != nullptr ? store->impl->assertion_count() : 0;
}

uint64_t ckece_store_concept_count(const ckece_store *store) {
  return store != nullptr ? store->impl->concept_count() : 0;
}

ckece_status ckece_store_query_json(const ckece_store *store, const char *keyword,
                                    char **out_json) {
  return guarded([&] {
    require(store != nullptr && keyword != nullptr && out_json != nullptr, "NULL argument");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &a : store->impl->query(keyword)) {
      arr.push_back({{"start", a.start},
                     {"relation", a.relation.name()},
                     {"end", a.end},
                     {"raw_confidence", a.raw_confidence},
                     {"scaled_confidence", a.scaled_confidence}});
    }
    *out_json = dup_string(arr.dump());
  });
}

// ---- vectors ---------------------------------------------------------------

ckece_status ckece_vectors_load(const char *path, size_t dimension, int gzip,
                                ckece_vectors **out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "path and out must not be NULL");
    require(dimension > 0, "dimension must be positive");
    auto in = ckece::open_input(path, gzip != 0);
    auto vectors =
        std::make_shared<const ckece::VectorStore>(ckece::VectorStore::load(*in, dimension));
    *out = new ckece_vectors{std::move(vectors)};
  });
}

void ckece_vectors_free(ckece_vectors *vectors) { delete vectors; }

size_t ckece_vectors_size(const ckece_vectors *vectors) {
  return vectors != nullptr ? vectors->impl->size() : 0;
}

size_t ckece_vectors_dimension(const ckece_vectors *vectors) {
  return vectors != nullptr ? vectors->impl->dimension() : 0;
}

ckece_status ckece_vectors_similarity(const ckece_vectors *vectors, const char *a, const char *b,
                                      double *out) {
  return guarded([&] {
    require(vectors != nullptr && a != nullptr && b != nullptr && out != nullptr, "NULL argument");
    *out = ckece::cosine(vectors->impl->embed_phrase(a), vectors->impl->embed_phrase(b));
  });
}

// ---- stop words ------------------------------------------------------------

ckece_status ckece_stopwords_load(const char *path, ckece_stopwords **out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    std::shared_ptr<const ckece::StopwordSet> set;
    if (path == nullptr) {
      set = std::make_shared<const ckece::StopwordSet>(ckece::StopwordSet::bundled());
    } else {
      auto in = ckece::open_input(path);
      set = std::make_shared<const ckece::StopwordSet>(ckece::StopwordSet::load(*in));
    }
    *out = new ckece_stopwords{std::move(set)};
  });
}

void ckece_stopwords_free(ckece_stopwords *stopwords) { delete stopwords; }

size_t ckece_stopwords_size(const ckece_stopwords *stopwords) {
  return stopwords != nullptr ? stopwords->impl->size() : 0;
}

// ---- extractor -------------------------------------------------------------

void ckece_extractor_config_init(ckece_extractor_config *config) {
  if (config == nullptr) return;
  ckece::ExtractorConfig defaults;
  config->alpha = defaults.alpha;
  config->tuples_per_keyword = static_cast<uint32_t>(defaults.tuples_per_keyword);
  config->tuples_per_context = static_cast<uint32_t>(defaults.tuples_per_context);
  config->max_keywords = static_cast<uint32_t>(defaults.max_keywords);
  config->comma_separator = 0;
  config->excluded_relations = nullptr;
}

ckece_status ckece_extractor_create(const ckece_store *store, const ckece_lexicon *lexicon,
                                    const ckece_vectors *vectors,
                                    const ckece_stopwords *stopwords,
                                    const ckece_extractor_config *config, ckece_extractor **out) {
  return guarded([&] {
    require(store != nullptr && lexicon != nullptr && vectors != nullptr &&
                stopwords != nullptr && out != nullptr,
            "NULL argument");
    ckece::ExtractorConfig cfg;
    auto separator = ckece::ConceptSeparator::kSemicolon;
    if (config != nullptr) {
      cfg.alpha = config->alpha;
      cfg.tuples_per_keyword = config->tuples_per_keyword;
      cfg.tuples_per_context = config->tuples_per_context;
      cfg.max_keywords = config->max_keywords;
      if (config->comma_separator) separator = ckece::ConceptSeparator::kComma;
      if (config->excluded_relations != nullptr) {
        cfg.excluded_relations.clear();
        for (auto item : ckece::split(config->excluded_relations, ',')) {
          auto name = ckece::trim(item);
          if (!name.empty()) cfg.excluded_relations.emplace(name);
        }
      }
    }
    auto handle = std::make_unique<ckece_extractor>();
    handle->store = store->impl;
    handle->lexicon = lexicon->impl;
    handle->vectors = vectors->impl;
    handle->stopwords = stopwords->impl;
    handle->impl = std::make_unique<ckece::ConceptExtractor>(
        *handle->store, *handle->lexicon, *handle->vectors, *handle->stopwords, std::move(cfg),
        separator);
    *out = handle.release();
  });
}

void ckece_extractor_free(ckece_extractor *extractor) { delete extractor; }

ckece_status ckece_extract_json(const ckece_extractor *extractor, const char *context_text,
                                char **out_json) {
  return guarded([&] {
    require(extractor != nullptr && context_text != nullptr && out_json != nullptr,
            "NULL argument");
    auto set = extractor->impl->extract(context_text);
    *out_json = dup_string(ckece::concept_set_to_json(set).dump());
  });
}

ckece_status ckece_extract_batch(const ckece_extractor *extractor, const char *input_path,
                                 const char *output_path, uint32_t workers, uint64_t *records) {
  return guarded([&] {
    require(extractor != nullptr && input_path != nullptr, "NULL argument");
    require(workers >= 1, "workers must be at least 1");
    auto in = ckece::open_input(input_path);
    auto os = ckece::open_output(output_path != nullptr ? output_path : "-");
    auto n = ckece::run_extract_batch(*in, *os, *extractor->impl, workers);
    if (records != nullptr) *records = n;
  });
}

// ---- corpus ----------------------------------------------------------------

ckece_status ckece_corpus_process(const char *csv_path, const ckece_extractor *extractor,
                                  const char *output_path, uint32_t workers, int lowercase,
                                  ckece_corpus_stats *stats) {
  return guarded([&] {
    require(csv_path != nullptr, "csv_path must not be NULL");
    require(workers >= 1, "workers must be at least 1");
    auto in = ckece::open_input(csv_path);
    auto os = ckece::open_output(output_path != nullptr ? output_path : "-");
    ckece::FormatOptions options;
    options.lowercase = lowercase != 0;
    auto s = ckece::run_corpus(*in, *os, extractor != nullptr ? extractor->impl.get() : nullptr,
                               workers, options);
    if (stats != nullptr) {
      *stats = {s.load.rows, s.load.dialogues, s.load.skipped_conversations, s.examples};
    }
  });
}

ckece_status ckece_format_encoder_input(const char *const *turns, size_t count, char **out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    require(count > 0, "context must contain at least one turn");
    auto context = to_strings(turns, count, "turns must not contain NULL");
    *out = dup_string(ckece::format_encoder_input(context));
  });
}

ckece_status ckece_format_decoder_input(const char *concepts, const char *response,
                                        char **out_text, size_t *loss_mask_boundary) {
  return guarded([&] {
    require(response != nullptr && out_text != nullptr, "NULL argument");
    auto d = ckece::format_decoder_input(concepts != nullptr ? concepts : "", response);
    *out_text = dup_string(d.text);
    if (loss_mask_boundary != nullptr) *loss_mask_boundary = d.loss_mask_boundary;
  });
}

// ---- metrics ---------------------------------------------------------------

ckece_status ckece_distinct_n(const char *const *responses, size_t count, uint32_t n,
                              double *out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    auto items = to_strings(responses, count, "responses must not contain NULL");
    *out = ckece::distinct_n(items, n);
  });
}

ckece_status ckece_emotion_accuracy(const char *const *predicted, const char *const *gold,
                                    size_t count, double *out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    auto p = to_strings(predicted, count, "predicted labels must not contain NULL");
    auto g = to_strings(gold, count, "gold labels must not contain NULL");
    *out = ckece::emotion_accuracy(p, g);
  });
}

ckece_status ckece_corpus_perplexity(const double *logprobs, const size_t *record_lengths,
                                     size_t record_count, double *out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    require(record_count == 0 || record_lengths != nullptr, "record_lengths must not be NULL");
    std::vector<std::vector<double>> records(record_count);
    size_t offset = 0;
    for (size_t i = 0; i < record_count; ++i) {
      require(record_lengths[i] == 0 || logprobs != nullptr, "logprobs must not be NULL");
      records[i].assign(logprobs + offset, logprobs + offset + record_lengths[i]);
      offset += record_lengths[i];
    }
    *out = ckece::corpus_perplexity(records);
  });
}

ckece_status ckece_eval_file(const char *path, ckece_metric metric, uint32_t n, int as_json,
                             double *value, char **out_report) {
  return guarded([&] {
    require(path != nullptr, "path must not be NULL");
    ckece::Metric m;
    switch (metric) {
      case CKECE_METRIC_DISTINCT: m = ckece::Metric::kDistinct; break;
      case CKECE_METRIC_ACCURACY: m = ckece::Metric::kAccuracy; break;
      case CKECE_METRIC_PERPLEXITY: m = ckece::Metric::kPerplexity; break;
      default: throw ckece::Error(ckece::ErrorKind::kInvalidArgument, "unknown metric");
    }
    auto in = ckece::open_input(path);
    auto report = ckece::evaluate_records(*in, m, n);
    if (value != nullptr) *value = report.value;
    if (out_report != nullptr) *out_report = dup_string(ckece::format_report(report, as_json != 0));
  });
}

}  // extern "C"
