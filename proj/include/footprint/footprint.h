/* Copyright 2026 The Footprint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the footprint analysis library.
 *
 * Objects are opaque handles created and released by fp_* functions.
 * Every fallible call returns an fp_rc; on failure fp_last_error()
 * holds a thread-local message until the next failing call on the
 * same thread. Handles are not thread-safe individually, but distinct
 * handles may be used from distinct threads.
 */

#ifndef FOOTPRINT_FOOTPRINT_H_
#define FOOTPRINT_FOOTPRINT_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fp_rc {
  FP_OK = 0,
  FP_ERR_ARGUMENT = 1, /* null handle or out-of-range option value */
  FP_ERR_INPUT = 2,    /* unreadable or malformed input data */
  FP_ERR_INTERNAL = 3  /* broken internal invariant */
} fp_rc;

/* Library version string, e.g. "0.1.0". */
const char* fp_version(void);

/* Message describing this thread's most recent failure; never NULL. */
const char* fp_last_error(void);

/* ---- taxonomy ---------------------------------------------------- */

typedef struct fp_taxonomy fp_taxonomy;

fp_rc fp_taxonomy_load_file(const char* path, fp_taxonomy** out);
fp_rc fp_taxonomy_default(fp_taxonomy** out);
size_t fp_taxonomy_category_count(const fp_taxonomy* taxonomy);
/* NULL when index is out of range. */
const char* fp_taxonomy_category_name(const fp_taxonomy* taxonomy,
                                      size_t index);
void fp_taxonomy_free(fp_taxonomy* taxonomy);

/* ---- session store ----------------------------------------------- */

typedef struct fp_store fp_store;

typedef struct fp_store_stats {
  size_t sessions;
  size_t visits;
  size_t requests;
  size_t har_entries_skipped;
} fp_store_stats;

fp_rc fp_store_new(fp_store** out);
/* Loads every *.jsonl session log under dir. */
fp_rc fp_store_open(const char* dir, fp_store** out);
/* The session's user id is the file stem. */
fp_rc fp_store_add_har(fp_store* store, const char* path);
fp_rc fp_store_add_session_log(fp_store* store, const char* path);
/* Writes one <user>.jsonl per session plus run_manifest.json; format
 * (may be NULL) is recorded in the manifest config. */
fp_rc fp_store_save(const fp_store* store, const char* dir,
                    const char* format);
fp_rc fp_store_get_stats(const fp_store* store, fp_store_stats* out);
void fp_store_free(fp_store* store);

/* ---- analyze ------------------------------------------------------ */

typedef struct fp_analysis_options fp_analysis_options;

fp_rc fp_analysis_options_new(fp_analysis_options** out);
fp_rc fp_analysis_options_set_stopwords_file(fp_analysis_options* options,
                                             const char* path);
fp_rc fp_analysis_options_set_max_phrase_len(fp_analysis_options* options,
                                             int max_phrase_len);
fp_rc fp_analysis_options_set_rake_keep_fraction(fp_analysis_options* options,
                                                 double fraction);
/* "cumulative" or "per-visit". */
fp_rc fp_analysis_options_set_window(fp_analysis_options* options,
                                     const char* window);
/* Comma-separated resource kinds dropped before the domain check,
 * e.g. "script,stylesheet,image,font"; "" excludes nothing. */
fp_rc fp_analysis_options_set_excluded_kinds(fp_analysis_options* options,
                                             const char* kinds_csv);
void fp_analysis_options_free(fp_analysis_options* options);

typedef struct fp_analysis_stats {
  size_t users;
  size_t visits;
  size_t requests_emitted;
  size_t requests_excluded_asset;
  size_t requests_excluded_same_domain;
  size_t requests_unparseable;
  size_t unmatched_user_terms;
  size_t unmatched_ad_terms;
  /* First-present-to-last percent change of the population series;
   * NaN when the series has no present points or starts at zero. */
  double population_l1_change_pct;
  double population_l2_change_pct;
  double population_tv_change_pct;
} fp_analysis_stats;

/* Writes profiles/, series/, summary.csv and run_manifest.json under
 * out_dir. taxonomy and options may be NULL for defaults; stats may
 * be NULL. */
fp_rc fp_analyze(const fp_store* store, const fp_taxonomy* taxonomy,
                 const fp_analysis_options* options, const char* out_dir,
                 fp_analysis_stats* stats);

/* ---- rank ---------------------------------------------------------- */

typedef struct fp_rank_options fp_rank_options;

fp_rc fp_rank_options_new(fp_rank_options** out);
/* Nonzero ranks full hosts instead of registrable domains. */
fp_rc fp_rank_options_set_by_host(fp_rank_options* options, int by_host);
/* Row limit for ranking.csv; default 20. */
fp_rc fp_rank_options_set_top(fp_rank_options* options, int top);
fp_rc fp_rank_options_set_excluded_kinds(fp_rank_options* options,
                                         const char* kinds_csv);
void fp_rank_options_free(fp_rank_options* options);

typedef struct fp_rank_stats {
  size_t pages;
  size_t trackers;
  size_t edges;
  size_t isolated;
} fp_rank_stats;

/* Writes ranking.csv, graph_edges.tsv and run_manifest.json under
 * out_dir. options and stats may be NULL. */
fp_rc fp_rank(const fp_store* store, const fp_rank_options* options,
              const char* out_dir, fp_rank_stats* stats);

/* ---- simulate ------------------------------------------------------ */

typedef struct fp_sim_options fp_sim_options;

fp_rc fp_sim_options_new(fp_sim_options** out);
fp_rc fp_sim_options_set_seed(fp_sim_options* options, uint64_t seed);
fp_rc fp_sim_options_set_users(fp_sim_options* options, int users);
fp_rc fp_sim_options_set_pages(fp_sim_options* options, int pages);
/* Weight of the learned profile in the ad mixture, in [0, 1]. */
fp_rc fp_sim_options_set_responsiveness(fp_sim_options* options,
                                        double responsiveness);
fp_rc fp_sim_options_set_tags_per_page(fp_sim_options* options, int count);
fp_rc fp_sim_options_set_params_per_page(fp_sim_options* options, int count);
fp_rc fp_sim_options_set_trackers_per_page(fp_sim_options* options,
                                           int count);
void fp_sim_options_free(fp_sim_options* options);

/* Generates a synthetic population. When out_dir is non-NULL the
 * session logs and run_manifest.json are written there; when
 * out_store is non-NULL the caller receives the store handle. At
 * least one of the two must be given. options and taxonomy may be
 * NULL for defaults. */
fp_rc fp_simulate(const fp_sim_options* options, const fp_taxonomy* taxonomy,
                  const char* out_dir, fp_store** out_store);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FOOTPRINT_FOOTPRINT_H_ */
