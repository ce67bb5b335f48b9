/* Copyright 2026 The kbopt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the kbopt keyboard-layout toolkit.
 *
 * Every object is an opaque handle created by a kbo_*_load / kbo_*_create
 * style call and released with the matching kbo_*_free. Functions return a
 * kbo_status; on failure kbo_last_error() holds a message for the calling
 * thread until its next failing call. Output parameters are written only on
 * success. Strings are UTF-8; paths are native narrow strings. */

#ifndef KBOPT_KBOPT_H_
#define KBOPT_KBOPT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KBOPT_BUILDING_LIBRARY)
#    define KBO_API __declspec(dllexport)
#  else
#    define KBO_API __declspec(dllimport)
#  endif
#else
#  define KBO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kbo_status {
  KBO_OK = 0,
  KBO_ERR_INVALID_ARGUMENT = 1,
  KBO_ERR_MISSING_PATH = 2,
  KBO_ERR_DECODE = 3,
  KBO_ERR_EMPTY_ALPHABET = 4,
  KBO_ERR_ABSENT_GRAM = 5,
  KBO_ERR_EMPTY_CORPUS = 6,
  KBO_ERR_CONTRACT = 7,
  KBO_ERR_INSUFFICIENT_ALPHABET = 8,
  KBO_ERR_GEOMETRY = 9,
  KBO_ERR_MALFORMED = 10,
  KBO_ERR_DUPLICATE_KEY = 11,
  KBO_ERR_UNKNOWN_KEY = 12,
  KBO_ERR_INTERNAL = 13,
  KBO_ERR_IO = 14
} kbo_status;

typedef struct kbo_alphabet kbo_alphabet;
typedef struct kbo_corpus kbo_corpus;
typedef struct kbo_ngrams kbo_ngrams;
typedef struct kbo_txdb kbo_txdb;
typedef struct kbo_mining kbo_mining;
typedef struct kbo_geometry kbo_geometry;
typedef struct kbo_optimization kbo_optimization;
typedef struct kbo_layout kbo_layout;
typedef struct kbo_report kbo_report;

KBO_API const char* kbo_version(void);
KBO_API const char* kbo_status_string(kbo_status status);
KBO_API const char* kbo_last_error(void);

/* Alphabet */
KBO_API kbo_status kbo_alphabet_builtin(kbo_alphabet** out);
KBO_API kbo_status kbo_alphabet_load(const char* path, kbo_alphabet** out);
KBO_API size_t kbo_alphabet_size(const kbo_alphabet* alphabet);
KBO_API void kbo_alphabet_free(kbo_alphabet* alphabet);

/* Corpus: files and directories in the given order, NFC-normalized when
 * `normalize` is nonzero. */
KBO_API kbo_status kbo_corpus_load(const char* const* paths, size_t path_count,
                                   const kbo_alphabet* alphabet, int normalize,
                                   kbo_corpus** out);
KBO_API uint64_t kbo_corpus_total_symbols(const kbo_corpus* corpus);
KBO_API void kbo_corpus_free(kbo_corpus* corpus);

/* Monogram, digram and trigram tables of one corpus. */
KBO_API kbo_status kbo_ngrams_count(const kbo_corpus* corpus, const kbo_alphabet* alphabet,
                                    kbo_ngrams** out);
KBO_API kbo_status kbo_ngrams_total(const kbo_ngrams* ngrams, int order, uint64_t* out);
KBO_API kbo_status kbo_ngrams_write_tsv(const kbo_ngrams* ngrams, int order,
                                        const char* path);
KBO_API kbo_status kbo_ngrams_write_top(const kbo_ngrams* ngrams, size_t k,
                                        const char* path);
KBO_API void kbo_ngrams_free(kbo_ngrams* ngrams);

/* Transaction databases for frequent-itemset mining. */
KBO_API kbo_status kbo_txdb_load(const char* path, kbo_txdb** out);
KBO_API kbo_status kbo_txdb_from_corpus(const kbo_corpus* corpus,
                                        const kbo_alphabet* alphabet, kbo_txdb** out);
KBO_API size_t kbo_txdb_size(const kbo_txdb* db);
/* ceil(percent / 100 * size), at least 1. */
KBO_API kbo_status kbo_txdb_min_count(const kbo_txdb* db, double percent, uint64_t* out);
KBO_API void kbo_txdb_free(kbo_txdb* db);

KBO_API kbo_status kbo_mine(const kbo_txdb* db, uint64_t min_support_count,
                            double min_confidence_percent, kbo_mining** out);
KBO_API size_t kbo_mining_level_count(const kbo_mining* mining);
KBO_API size_t kbo_mining_rule_count(const kbo_mining* mining);
KBO_API kbo_status kbo_mining_write_levels(const kbo_mining* mining, const char* path);
KBO_API kbo_status kbo_mining_write_candidates(const kbo_mining* mining, const char* path);
KBO_API kbo_status kbo_mining_write_rules(const kbo_mining* mining, const char* path);
KBO_API void kbo_mining_free(kbo_mining* mining);

/* Keyboard geometry: built-in "default-3row" / "test-2key" or a JSON file. */
KBO_API kbo_status kbo_geometry_builtin(const char* name, kbo_geometry** out);
KBO_API kbo_status kbo_geometry_load(const char* path, kbo_geometry** out);
KBO_API const char* kbo_geometry_name(const kbo_geometry* geometry);
KBO_API kbo_status kbo_geometry_write(const kbo_geometry* geometry, const char* path);
KBO_API void kbo_geometry_free(kbo_geometry* geometry);

typedef enum kbo_association { KBO_ASSOCIATION_DIRECTED = 0, KBO_ASSOCIATION_SYMMETRIC = 1 } kbo_association;
typedef enum kbo_policy { KBO_POLICY_LITERAL = 0, KBO_POLICY_MAJORITY = 1 } kbo_policy;

typedef struct kbo_optimize_options {
  kbo_association association;
  kbo_policy policy;
} kbo_optimize_options;

/* Partitions the ranked letters over both hands and places them on keys.
 * `options` may be NULL for the defaults. */
KBO_API kbo_status kbo_optimize(const kbo_ngrams* ngrams, const kbo_alphabet* alphabet,
                                const kbo_geometry* geometry, const char* layout_name,
                                const kbo_optimize_options* options,
                                kbo_optimization** out);
KBO_API size_t kbo_optimization_unassigned_count(const kbo_optimization* optimization);
KBO_API kbo_status kbo_optimization_write_layout(const kbo_optimization* optimization,
                                                 const char* path);
KBO_API kbo_status kbo_optimization_write_trace(const kbo_optimization* optimization,
                                                const char* path);
/* Borrowed view; valid while `optimization` lives. */
KBO_API const kbo_layout* kbo_optimization_layout(const kbo_optimization* optimization);
KBO_API void kbo_optimization_free(kbo_optimization* optimization);

/* Reads a layout file. Its geometry must be `geometry` (matched by name) or
 * a built-in one; `geometry` may be NULL. */
KBO_API kbo_status kbo_layout_load(const char* path, const kbo_geometry* geometry,
                                   kbo_layout** out);
KBO_API const char* kbo_layout_name(const kbo_layout* layout);
KBO_API void kbo_layout_free(kbo_layout* layout);

typedef struct kbo_report_values {
  uint64_t hand_switching;
  uint64_t left_load;
  uint64_t right_load;
  uint64_t undetermined;
  uint64_t total_symbols;
  uint64_t determined_runs;
} kbo_report_values;

KBO_API kbo_status kbo_evaluate(const kbo_layout* layout, const kbo_corpus* corpus,
                                kbo_report** out);
KBO_API void kbo_report_values_get(const kbo_report* report, kbo_report_values* out);
KBO_API void kbo_report_free(kbo_report* report);

/* Writes the side-by-side comparison as TSV and/or aligned text; either path
 * may be NULL. */
KBO_API kbo_status kbo_reports_write(const kbo_report* const* reports, size_t count,
                                     const char* tsv_path, const char* text_path);

/* Copies the aligned text comparison into `buffer` (NUL-terminated, truncated
 * to `capacity`) and stores the full length, excluding the NUL, in `needed`.
 * `buffer` may be NULL when `capacity` is 0. */
KBO_API kbo_status kbo_reports_render(const kbo_report* const* reports, size_t count,
                                      char* buffer, size_t capacity, size_t* needed);

/* Writes the reference transaction database (sample_transactions.txt) and the
 * built-in geometries (test-2key.json, default-3row.json) into `directory`. */
KBO_API kbo_status kbo_write_fixtures(const char* directory);

#ifdef __cplusplus
}
#endif

#endif /* KBOPT_KBOPT_H_ */
