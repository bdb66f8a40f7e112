/*
 * Copyright 2026 The CKECE Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the concept extractor library.
 *
 * Every fallible call returns a ckece_status; on failure the message for the
 * calling thread is available from ckece_last_error() until the next call on
 * that thread. Handles are opaque and released with the matching _free
 * function (NULL is accepted). Loaded resources are immutable and may be
 * shared across threads. An extractor keeps its resources alive, so the
 * resource handles may be freed before the extractor.
 *
 * Strings returned through char** are heap-allocated and must be released
 * with ckece_string_free().
 */

#ifndef CKECE_CKECE_H_
#define CKECE_CKECE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CKECE_BUILDING_LIBRARY)
#    define CKECE_API __declspec(dllexport)
#  else
#    define CKECE_API __declspec(dllimport)
#  endif
#else
#  define CKECE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ckece_status {
  CKECE_OK = 0,
  CKECE_ERR_INVALID_ARGUMENT = 1,
  CKECE_ERR_IO = 2,
  CKECE_ERR_PARSE = 3,  /* malformed text input */
  CKECE_ERR_FORMAT = 4, /* bad binary store: magic, version, checksum, truncation */
  CKECE_ERR_INTERNAL = 5
} ckece_status;

typedef struct ckece_lexicon ckece_lexicon;
typedef struct ckece_store ckece_store;
typedef struct ckece_vectors ckece_vectors;
typedef struct ckece_stopwords ckece_stopwords;
typedef struct ckece_extractor ckece_extractor;

CKECE_API const char *ckece_version(void);
CKECE_API const char *ckece_last_error(void);
/* Line number attached to the last parse error on this thread, 0 if none. */
CKECE_API uint64_t ckece_last_error_line(void);
CKECE_API void ckece_string_free(char *str);

/* ---- scaling and emotion lexicon -------------------------------------- */

/* (value - min) / (max - min) after clamping value into [min, max]. */
CKECE_API ckece_status ckece_min_max_scale(double value, double min, double max, double *out);

CKECE_API ckece_status ckece_lexicon_load(const char *path, ckece_lexicon **out);
CKECE_API void ckece_lexicon_free(ckece_lexicon *lexicon);
CKECE_API size_t ckece_lexicon_size(const ckece_lexicon *lexicon);
/* Writes 1 to *found and the VAD scores when the word is present, else 0. */
CKECE_API ckece_status ckece_lexicon_lookup(const ckece_lexicon *lexicon, const char *word,
                                            int *found, double *valence, double *arousal,
                                            double *dominance);
CKECE_API ckece_status ckece_lexicon_emotion_intensity(const ckece_lexicon *lexicon,
                                                       const char *term, double *out);

/* ---- knowledge store --------------------------------------------------- */

typedef struct ckece_ingest_options {
  const char *language; /* NULL means "en" */
  int strict;           /* nonzero: malformed lines are fatal */
  int gzip;             /* nonzero: input is gzip-compressed */
} ckece_ingest_options;

typedef struct ckece_ingest_stats {
  uint64_t lines;
  uint64_t assertions;
  uint64_t concepts;
  uint64_t language_filtered;
  uint64_t malformed;
  uint64_t missing_weight;
} ckece_ingest_stats;

CKECE_API void ckece_ingest_options_init(ckece_ingest_options *options);
/* options and stats may be NULL. */
CKECE_API ckece_status ckece_store_ingest(const char *path, const ckece_ingest_options *options,
                                          ckece_store **out, ckece_ingest_stats *stats);
CKECE_API ckece_status ckece_store_save(const ckece_store *store, const char *path);
CKECE_API ckece_status ckece_store_load(const char *path, ckece_store **out);
CKECE_API void ckece_store_free(ckece_store *store);
CKECE_API uint64_t ckece_store_assertion_count(const ckece_store *store);
CKECE_API uint64_t ckece_store_concept_count(const ckece_store *store);
/* JSON array of {"start","relation","end","raw_confidence","scaled_confidence"}. */
CKECE_API ckece_status ckece_store_query_json(const ckece_store *store, const char *keyword,
                                              char **out_json);

/* ---- word vectors ------------------------------------------------------ */

CKECE_API ckece_status ckece_vectors_load(const char *path, size_t dimension, int gzip,
                                          ckece_vectors **out);
CKECE_API void ckece_vectors_free(ckece_vectors *vectors);
CKECE_API size_t ckece_vectors_size(const ckece_vectors *vectors);
CKECE_API size_t ckece_vectors_dimension(const ckece_vectors *vectors);
/* Cosine between the mean-pooled embeddings of two phrases. */
CKECE_API ckece_status ckece_vectors_similarity(const ckece_vectors *vectors, const char *a,
                                                const char *b, double *out);

/* ---- stop words -------------------------------------------------------- */

/* path == NULL loads the bundled English list. */
CKECE_API ckece_status ckece_stopwords_load(const char *path, ckece_stopwords **out);
CKECE_API void ckece_stopwords_free(ckece_stopwords *stopwords);
CKECE_API size_t ckece_stopwords_size(const ckece_stopwords *stopwords);

/* ---- concept extraction ------------------------------------------------ */

typedef struct ckece_extractor_config {
  double alpha;                  /* default 0.1 */
  uint32_t tuples_per_keyword;   /* default 3 */
  uint32_t tuples_per_context;   /* default 10 */
  uint32_t max_keywords;         /* default 10 */
  int comma_separator;           /* nonzero: join concepts with ", " instead of "; " */
  const char *excluded_relations; /* comma-separated; NULL keeps the default list */
} ckece_extractor_config;

CKECE_API void ckece_extractor_config_init(ckece_extractor_config *config);
/* config may be NULL for defaults. */
CKECE_API ckece_status ckece_extractor_create(const ckece_store *store,
                                              const ckece_lexicon *lexicon,
                                              const ckece_vectors *vectors,
                                              const ckece_stopwords *stopwords,
                                              const ckece_extractor_config *config,
                                              ckece_extractor **out);
CKECE_API void ckece_extractor_free(ckece_extractor *extractor);
/* One context -> {"keywords": [...], "tuples": [...], "rendered": "..."}. */
CKECE_API ckece_status ckece_extract_json(const ckece_extractor *extractor,
                                          const char *context_text, char **out_json);
/* JSON-lines contexts file -> JSON-lines results, input order preserved.
 * "-" selects stdin / stdout. */
CKECE_API ckece_status ckece_extract_batch(const ckece_extractor *extractor,
                                           const char *input_path, const char *output_path,
                                           uint32_t workers, uint64_t *records);

/* ---- dialogue corpus --------------------------------------------------- */

typedef struct ckece_corpus_stats {
  uint64_t rows;
  uint64_t dialogues;
  uint64_t skipped_conversations;
  uint64_t examples;
} ckece_corpus_stats;

/* extractor may be NULL (empty concept strings). lowercase != 0 lowercases
 * model-facing text. */
CKECE_API ckece_status ckece_corpus_process(const char *csv_path,
                                            const ckece_extractor *extractor,
                                            const char *output_path, uint32_t workers,
                                            int lowercase, ckece_corpus_stats *stats);
CKECE_API ckece_status ckece_format_encoder_input(const char *const *turns, size_t count,
                                                  char **out);
CKECE_API ckece_status ckece_format_decoder_input(const char *concepts, const char *response,
                                                  char **out_text, size_t *loss_mask_boundary);

/* ---- metrics ----------------------------------------------------------- */

typedef enum ckece_metric {
  CKECE_METRIC_DISTINCT = 0,
  CKECE_METRIC_ACCURACY = 1,
  CKECE_METRIC_PERPLEXITY = 2
} ckece_metric;

CKECE_API ckece_status ckece_distinct_n(const char *const *responses, size_t count, uint32_t n,
                                        double *out);
CKECE_API ckece_status ckece_emotion_accuracy(const char *const *predicted,
                                              const char *const *gold, size_t count,
                                              double *out);
/* logprobs holds every record's tokens back to back; record_lengths[i] is
 * the token count of record i. */
CKECE_API ckece_status ckece_corpus_perplexity(const double *logprobs,
                                               const size_t *record_lengths,
                                               size_t record_count, double *out);
/* Evaluates a JSON-lines generation-record file and renders the report as
 * key=value lines (as_json == 0) or a JSON object. n is the distinct-n order. */
CKECE_API ckece_status ckece_eval_file(const char *path, ckece_metric metric, uint32_t n,
                                       int as_json, double *value, char **out_report);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* CKECE_CKECE_H_ */
