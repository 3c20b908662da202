// Copyright 2026 The discfuzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * discfuzz C API.
 *
 * Every object is an opaque handle created by a df_*_create / df_*_load /
 * df_*_run call and released with the matching df_*_free. Fallible calls
 * return a df_status; on failure the out-parameter is left untouched and
 * df_last_error() describes the failure for the calling thread.
 *
 * Strings returned by accessors are owned by the handle and stay valid until
 * it is freed.
 */
#ifndef DISCFUZZ_DISCFUZZ_H_
#define DISCFUZZ_DISCFUZZ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DISCFUZZ_BUILDING)
#define DF_API __declspec(dllexport)
#else
#define DF_API __declspec(dllimport)
#endif
#else
#define DF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define DF_VERSION_STRING "0.1.0"

typedef enum df_status {
  DF_OK = 0,
  DF_INVALID_ARGUMENT = 1,
  DF_EMPTY_PROMPT = 2,
  DF_INDEX_OUT_OF_RANGE = 3,
  DF_DUPLICATE_INDEX = 4,
  DF_WOULD_BE_EMPTY = 5,
  DF_INCONSISTENT_DIMENSION = 6,
  DF_PARSE_ERROR = 7,
  DF_EMPTY_STORE = 8,
  DF_ZERO_VECTOR = 9,
  DF_DIMENSION_MISMATCH = 10,
  DF_NO_EMBEDDABLE = 11,
  DF_UNKNOWN_WORD = 12,
  DF_BACKEND_UNAVAILABLE = 13,
  DF_INCOMPATIBLE_SAMPLE = 14,
  DF_MALFORMED_RESPONSE = 15,
  DF_OUT_OF_RANGE_SCORE = 16,
  DF_EMPTY_SEED = 17,
  DF_UNKNOWN_BACKEND_KIND = 18,
  DF_FILE_NOT_FOUND = 19,
  DF_IO_ERROR = 20,
  DF_INTERNAL = 99
} df_status;

typedef struct df_embeddings df_embeddings;
typedef struct df_word_list df_word_list;
typedef struct df_checker df_checker;
typedef struct df_generator df_generator;
typedef struct df_seeds df_seeds;
typedef struct df_campaign_result df_campaign_result;
typedef struct df_corpus_report df_corpus_report;

/* Campaign hyperparameters. Initialize with df_campaign_params_init. */
typedef struct df_campaign_params {
  size_t budget;             /* T, maximum iterations (default 60) */
  size_t k_discrepant;       /* K, discrepant words mutated (default 1) */
  size_t candidate_fanout;   /* N, candidates kept per mutation (default 1) */
  double target_threshold;   /* target must score below this (default 0.5) */
  double surrogate_threshold;/* surrogate must score above this (default 0.5) */
  double select_probability; /* per-word inclusion probability (default 0.5) */
  uint64_t rng_seed;         /* single-campaign runs only; corpus runs derive
                                one per seed from the global seed */
} df_campaign_params;

/* Backends and lexicons a campaign reads. None of them is modified. */
typedef struct df_engine_inputs {
  const df_checker* target;
  const df_checker* surrogate;
  const df_generator* generator;
  const df_word_list* nsfw_list;
  const df_word_list* dir_lexicon;
  const df_word_list* dis_lexicon;
  const df_embeddings* embeddings;
} df_engine_inputs;

DF_API const char* df_version(void);
DF_API const char* df_status_name(df_status status);
/* Message of the most recent failing call on this thread ("" if none). */
DF_API const char* df_last_error(void);

/* Embeddings: "word v1 ... vd" per line. */
DF_API df_status df_embeddings_load(const char* path, df_embeddings** out);
DF_API size_t df_embeddings_dim(const df_embeddings* store);
DF_API size_t df_embeddings_size(const df_embeddings* store);
DF_API void df_embeddings_free(df_embeddings* store);

DF_API df_status df_cosine_similarity(const double* a, const double* b,
                                      size_t length, double* out);

/* Word lists (NSFW list, DirLis, DisLis): one word per line, '#' comments. */
DF_API df_status df_word_list_load(const char* path, df_word_list** out);
DF_API df_status df_word_list_create(const char* const* words, size_t count,
                                     df_word_list** out);
DF_API size_t df_word_list_size(const df_word_list* list);
DF_API void df_word_list_free(df_word_list* list);

/*
 * Checker descriptors: "wordlist:PATH", "linear:PATH", "linear-sample:PATH",
 * "remote:URL". `embeddings` may be NULL for kinds that do not need it.
 */
DF_API df_status df_checker_create(const char* descriptor,
                                   const df_embeddings* embeddings,
                                   df_checker** out);
/* Scores a prompt with an empty sample (text-only use). */
DF_API df_status df_checker_score_text(const df_checker* checker,
                                       const char* prompt, double* out);
DF_API void df_checker_free(df_checker* checker);

/* Generator descriptors: "null", "stub", "remote:URL[#seed=N]". */
DF_API df_status df_generator_create(const char* descriptor,
                                     const df_embeddings* embeddings,
                                     df_generator** out);
DF_API void df_generator_free(df_generator* generator);

/* Seed corpus: one prompt per line, blank lines ignored. */
DF_API df_status df_seeds_load(const char* path, df_seeds** out);
DF_API df_status df_seeds_create(const char* const* prompts, size_t count,
                                 df_seeds** out);
DF_API size_t df_seeds_count(const df_seeds* seeds);
DF_API const char* df_seeds_at(const df_seeds* seeds, size_t index);
DF_API void df_seeds_free(df_seeds* seeds);

DF_API void df_campaign_params_init(df_campaign_params* params);

DF_API df_status df_campaign_run(const char* seed_prompt,
                                 const df_engine_inputs* inputs,
                                 const df_campaign_params* params,
                                 df_campaign_result** out);
/* 1 if an adversarial prompt was found, else 0. */
DF_API int df_campaign_result_found(const df_campaign_result* result);
DF_API const char* df_campaign_result_final_prompt(
    const df_campaign_result* result);
DF_API size_t df_campaign_result_iterations(const df_campaign_result* result);
DF_API uint64_t df_campaign_result_checker_queries(
    const df_campaign_result* result);
DF_API uint64_t df_campaign_result_generator_queries(
    const df_campaign_result* result);
DF_API double df_campaign_result_wall_time(const df_campaign_result* result);
/* Full result with sensitivity report and per-iteration trace, as JSON. */
DF_API const char* df_campaign_result_json(const df_campaign_result* result);
DF_API void df_campaign_result_free(df_campaign_result* result);

DF_API df_status df_corpus_run(const df_seeds* seeds,
                               const df_engine_inputs* inputs,
                               const df_campaign_params* params,
                               uint64_t global_seed, size_t workers,
                               df_corpus_report** out);
DF_API size_t df_corpus_report_seed_count(const df_corpus_report* report);
DF_API size_t df_corpus_report_found_count(const df_corpus_report* report);
DF_API double df_corpus_report_bypass_rate(const df_corpus_report* report);
/* NaN when no campaign succeeded. */
DF_API double df_corpus_report_mean_queries_success(
    const df_corpus_report* report);
DF_API double df_corpus_report_mean_time_success(
    const df_corpus_report* report);
/* JSONL text: one record per seed, then the summary line. */
DF_API const char* df_corpus_report_jsonl(const df_corpus_report* report);
DF_API df_status df_corpus_report_write(const df_corpus_report* report,
                                        const char* path);
DF_API void df_corpus_report_free(df_corpus_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DISCFUZZ_DISCFUZZ_H_ */
