// Copyright 2026 The Footprint Authors
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

#include "footprint/footprint.h"

#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "core/error.hpp"
#include "core/pipeline.hpp"
#include "core/report.hpp"
#include "core/stopwords.hpp"
#include "core/taxonomy.hpp"

namespace {

thread_local std::string t_last_error;

fp_rc set_error(fp_rc rc, std::string message) {
  t_last_error = std::move(message);
  return rc;
}

template <typename F>
fp_rc guarded(F&& body) {
  try {
    return body();
  } catch (const footprint::Error& e) {
    return set_error(e.kind() == footprint::ErrorKind::kInput
                         ? FP_ERR_INPUT
                         : FP_ERR_INTERNAL,
                     e.what());
  } catch (const std::exception& e) {
    return set_error(FP_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(FP_ERR_INTERNAL, "unknown failure");
  }
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::set<footprint::ResourceKind> parse_kinds_csv(std::string_view csv) {
  std::set<footprint::ResourceKind> kinds;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view token = trimmed(csv.substr(pos, comma - pos));
    if (!token.empty()) {
      auto kind = footprint::resource_kind_from_string(token);
      if (!kind) {
        throw footprint::Error::input("unknown resource kind \"" +
                                      std::string(token) + "\"");
      }
      kinds.insert(*kind);
    }
    if (comma == csv.size()) break;
    pos = comma + 1;
  }
  return kinds;
}

double pct_or_nan(const std::optional<double>& value) {
  return value ? *value : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

struct fp_taxonomy {
  const footprint::CategoryTaxonomy* view = nullptr;
  std::optional<footprint::CategoryTaxonomy> owned;
  std::string source = "bundled";
};

struct fp_store {
  footprint::SessionStore store;
};

struct fp_analysis_options {
  std::optional<footprint::StopwordList> stopwords;
  std::string stopwords_source = "bundled";
  int max_phrase_len = 3;
  double rake_keep_fraction = 1.0 / 3.0;
  footprint::ProfileWindow window = footprint::ProfileWindow::kCumulative;
  std::set<footprint::ResourceKind> excluded_kinds =
      footprint::FilterOptions{}.excluded_kinds;
};

struct fp_rank_options {
  bool by_host = false;
  int top = 20;
  std::set<footprint::ResourceKind> excluded_kinds =
      footprint::FilterOptions{}.excluded_kinds;
};

struct fp_sim_options {
  footprint::SimulationConfig config;
};

extern "C" {

const char* fp_version(void) { return footprint::kToolVersion; }

const char* fp_last_error(void) { return t_last_error.c_str(); }

/* ---- taxonomy ---------------------------------------------------- */

fp_rc fp_taxonomy_load_file(const char* path, fp_taxonomy** out) {
  if (path == nullptr || out == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_taxonomy_load_file: null argument");
  }
  return guarded([&] {
    auto handle = std::make_unique<fp_taxonomy>();
    handle->owned =
        footprint::CategoryTaxonomy::from_text(footprint::read_file(path));
    handle->view = &*handle->owned;
    handle->source = path;
    *out = handle.release();
    return FP_OK;
  });
}

fp_rc fp_taxonomy_default(fp_taxonomy** out) {
  if (out == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_taxonomy_default: null argument");
  }
  return guarded([&] {
    auto handle = std::make_unique<fp_taxonomy>();
    handle->view = &footprint::CategoryTaxonomy::bundled_default();
    *out = handle.release();
    return FP_OK;
  });
}

size_t fp_taxonomy_category_count(const fp_taxonomy* taxonomy) {
  return taxonomy == nullptr ? 0 : taxonomy->view->category_count();
}

const char* fp_taxonomy_category_name(const fp_taxonomy* taxonomy,
                                      size_t index) {
  if (taxonomy == nullptr || index >= taxonomy->view->category_count()) {
    return nullptr;
  }
  return taxonomy->view->category_name(index).c_str();
}

void fp_taxonomy_free(fp_taxonomy* taxonomy) { delete taxonomy; }

/* ---- session store ----------------------------------------------- */

fp_rc fp_store_new(fp_store** out) {
  if (out == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_store_new: null argument");
  }
  *out = new fp_store();
  return FP_OK;
}

fp_rc fp_store_open(const char* dir, fp_store** out) {
  if (dir == nullptr || out == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_store_open: null argument");
  }
  return guarded([&] {
    auto handle = std::make_unique<fp_store>();
    handle->store = footprint::load_store(dir);
    *out = handle.release();
    return FP_OK;
  });
}

fp_rc fp_store_add_har(fp_store* store, const char* path) {
  if (store == nullptr || path == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_store_add_har: null argument");
  }
  return guarded([&] {
    footprint::store_add_har(store->store, path);
    return FP_OK;
  });
}

fp_rc fp_store_add_session_log(fp_store* store, const char* path) {
  if (store == nullptr || path == nullptr) {
    return set_error(FP_ERR_ARGUMENT,
                     "fp_store_add_session_log: null argument");
  }
  return guarded([&] {
    footprint::store_add_session_log(store->store, path);
    return FP_OK;
  });
}

fp_rc fp_store_save(const fp_store* store, const char* dir,
                    const char* format) {
  if (store == nullptr || dir == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_store_save: null argument");
  }
  return guarded([&] {
    footprint::save_store(store->store, dir);
    nlohmann::ordered_json config;
    if (format != nullptr) config["format"] = format;
    footprint::write_manifest(dir, "ingest", store->store.sources, config);
    return FP_OK;
  });
}

fp_rc fp_store_get_stats(const fp_store* store, fp_store_stats* out) {
  if (store == nullptr || out == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_store_get_stats: null argument");
  }
  *out = fp_store_stats{};
  out->sessions = store->store.sessions.size();
  out->har_entries_skipped = store->store.har_entries_skipped;
  for (const footprint::BrowsingSession& session : store->store.sessions) {
    out->visits += session.visits.size();
    for (const footprint::PageVisit& visit : session.visits) {
      out->requests += visit.requests.size();
    }
  }
  return FP_OK;
}

void fp_store_free(fp_store* store) { delete store; }

/* ---- analyze ------------------------------------------------------ */

fp_rc fp_analysis_options_new(fp_analysis_options** out) {
  if (out == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_analysis_options_new: null argument");
  }
  *out = new fp_analysis_options();
  return FP_OK;
}

fp_rc fp_analysis_options_set_stopwords_file(fp_analysis_options* options,
                                             const char* path) {
  if (options == nullptr || path == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_stopwords_file: null argument");
  }
  return guarded([&] {
    options->stopwords =
        footprint::StopwordList::from_text(footprint::read_file(path));
    options->stopwords_source = path;
    return FP_OK;
  });
}

fp_rc fp_analysis_options_set_max_phrase_len(fp_analysis_options* options,
                                             int max_phrase_len) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_max_phrase_len: null options");
  }
  if (max_phrase_len < 1) {
    return set_error(FP_ERR_ARGUMENT, "max_phrase_len must be >= 1");
  }
  options->max_phrase_len = max_phrase_len;
  return FP_OK;
}

fp_rc fp_analysis_options_set_rake_keep_fraction(fp_analysis_options* options,
                                                 double fraction) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_rake_keep_fraction: null options");
  }
  if (!(fraction > 0.0) || fraction > 1.0) {
    return set_error(FP_ERR_ARGUMENT, "keep fraction must be in (0, 1]");
  }
  options->rake_keep_fraction = fraction;
  return FP_OK;
}

fp_rc fp_analysis_options_set_window(fp_analysis_options* options,
                                     const char* window) {
  if (options == nullptr || window == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_window: null argument");
  }
  std::string_view name(window);
  if (name == "cumulative") {
    options->window = footprint::ProfileWindow::kCumulative;
  } else if (name == "per-visit") {
    options->window = footprint::ProfileWindow::kPerVisit;
  } else {
    return set_error(FP_ERR_ARGUMENT,
                     "window must be \"cumulative\" or \"per-visit\"");
  }
  return FP_OK;
}

fp_rc fp_analysis_options_set_excluded_kinds(fp_analysis_options* options,
                                             const char* kinds_csv) {
  if (options == nullptr || kinds_csv == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_excluded_kinds: null argument");
  }
  try {
    options->excluded_kinds = parse_kinds_csv(kinds_csv);
  } catch (const footprint::Error& e) {
    return set_error(FP_ERR_ARGUMENT, e.what());
  }
  return FP_OK;
}

void fp_analysis_options_free(fp_analysis_options* options) { delete options; }

fp_rc fp_analyze(const fp_store* store, const fp_taxonomy* taxonomy,
                 const fp_analysis_options* options, const char* out_dir,
                 fp_analysis_stats* stats) {
  if (store == nullptr || out_dir == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_analyze: null argument");
  }
  return guarded([&] {
    static const fp_analysis_options kDefaults;
    const fp_analysis_options& opts =
        options != nullptr ? *options : kDefaults;

    footprint::AnalyzerConfig config;
    config.taxonomy = taxonomy != nullptr
                          ? taxonomy->view
                          : &footprint::CategoryTaxonomy::bundled_default();
    config.stopwords = opts.stopwords ? &*opts.stopwords
                                      : &footprint::StopwordList::bundled_english();
    config.max_phrase_len = opts.max_phrase_len;
    config.rake_keep_fraction = opts.rake_keep_fraction;
    config.window = opts.window;
    config.filter.excluded_kinds = opts.excluded_kinds;

    footprint::RunProvenance provenance;
    if (taxonomy != nullptr) provenance.taxonomy_source = taxonomy->source;
    provenance.stopwords_source = opts.stopwords_source;

    footprint::AnalyzeStats result =
        footprint::run_analyze(store->store, config, provenance, out_dir);
    if (stats != nullptr) {
      *stats = fp_analysis_stats{};
      stats->users = result.users;
      stats->visits = result.visits;
      stats->requests_emitted = result.tally.emitted;
      stats->requests_excluded_asset = result.tally.excluded_asset;
      stats->requests_excluded_same_domain = result.tally.excluded_same_domain;
      stats->requests_unparseable = result.tally.unparseable;
      stats->unmatched_user_terms = result.unmatched_user_terms;
      stats->unmatched_ad_terms = result.unmatched_ad_terms;
      stats->population_l1_change_pct =
          pct_or_nan(result.population_change.l1_pct);
      stats->population_l2_change_pct =
          pct_or_nan(result.population_change.l2_pct);
      stats->population_tv_change_pct =
          pct_or_nan(result.population_change.tv_pct);
    }
    return FP_OK;
  });
}

/* ---- rank ---------------------------------------------------------- */

fp_rc fp_rank_options_new(fp_rank_options** out) {
  if (out == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_rank_options_new: null argument");
  }
  *out = new fp_rank_options();
  return FP_OK;
}

fp_rc fp_rank_options_set_by_host(fp_rank_options* options, int by_host) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_by_host: null options");
  }
  options->by_host = by_host != 0;
  return FP_OK;
}

fp_rc fp_rank_options_set_top(fp_rank_options* options, int top) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_top: null options");
  }
  if (top < 1) return set_error(FP_ERR_ARGUMENT, "top must be >= 1");
  options->top = top;
  return FP_OK;
}

fp_rc fp_rank_options_set_excluded_kinds(fp_rank_options* options,
                                         const char* kinds_csv) {
  if (options == nullptr || kinds_csv == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_excluded_kinds: null argument");
  }
  try {
    options->excluded_kinds = parse_kinds_csv(kinds_csv);
  } catch (const footprint::Error& e) {
    return set_error(FP_ERR_ARGUMENT, e.what());
  }
  return FP_OK;
}

void fp_rank_options_free(fp_rank_options* options) { delete options; }

fp_rc fp_rank(const fp_store* store, const fp_rank_options* options,
              const char* out_dir, fp_rank_stats* stats) {
  if (store == nullptr || out_dir == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_rank: null argument");
  }
  return guarded([&] {
    static const fp_rank_options kDefaults;
    const fp_rank_options& opts = options != nullptr ? *options : kDefaults;

    footprint::GraphOptions graph_options;
    graph_options.by_host = opts.by_host;
    graph_options.filter.excluded_kinds = opts.excluded_kinds;

    footprint::RankStats result =
        footprint::run_rank(store->store, graph_options, opts.top, out_dir);
    if (stats != nullptr) {
      stats->pages = result.pages;
      stats->trackers = result.trackers;
      stats->edges = result.edges;
      stats->isolated = result.isolated;
    }
    return FP_OK;
  });
}

/* ---- simulate ------------------------------------------------------ */

fp_rc fp_sim_options_new(fp_sim_options** out) {
  if (out == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "fp_sim_options_new: null argument");
  }
  *out = new fp_sim_options();
  return FP_OK;
}

fp_rc fp_sim_options_set_seed(fp_sim_options* options, uint64_t seed) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_seed: null options");
  }
  options->config.seed = seed;
  return FP_OK;
}

fp_rc fp_sim_options_set_users(fp_sim_options* options, int users) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_users: null options");
  }
  if (users < 1) return set_error(FP_ERR_ARGUMENT, "users must be >= 1");
  options->config.num_users = users;
  return FP_OK;
}

fp_rc fp_sim_options_set_pages(fp_sim_options* options, int pages) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_pages: null options");
  }
  if (pages < 1) return set_error(FP_ERR_ARGUMENT, "pages must be >= 1");
  options->config.pages_per_user = pages;
  return FP_OK;
}

fp_rc fp_sim_options_set_responsiveness(fp_sim_options* options,
                                        double responsiveness) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_responsiveness: null options");
  }
  if (!(responsiveness >= 0.0) || responsiveness > 1.0) {
    return set_error(FP_ERR_ARGUMENT, "responsiveness must be in [0, 1]");
  }
  options->config.responsiveness = responsiveness;
  return FP_OK;
}

fp_rc fp_sim_options_set_tags_per_page(fp_sim_options* options, int count) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_tags_per_page: null options");
  }
  if (count < 1) return set_error(FP_ERR_ARGUMENT, "tags_per_page must be >= 1");
  options->config.tags_per_page = count;
  return FP_OK;
}

fp_rc fp_sim_options_set_params_per_page(fp_sim_options* options, int count) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_params_per_page: null options");
  }
  if (count < 0) {
    return set_error(FP_ERR_ARGUMENT, "params_per_page must be >= 0");
  }
  options->config.params_per_page = count;
  return FP_OK;
}

fp_rc fp_sim_options_set_trackers_per_page(fp_sim_options* options,
                                           int count) {
  if (options == nullptr) {
    return set_error(FP_ERR_ARGUMENT, "set_trackers_per_page: null options");
  }
  if (count < 1) {
    return set_error(FP_ERR_ARGUMENT, "trackers_per_page must be >= 1");
  }
  options->config.trackers_per_page = count;
  return FP_OK;
}

void fp_sim_options_free(fp_sim_options* options) { delete options; }

fp_rc fp_simulate(const fp_sim_options* options, const fp_taxonomy* taxonomy,
                  const char* out_dir, fp_store** out_store) {
  if (out_dir == nullptr && out_store == nullptr) {
    return set_error(FP_ERR_ARGUMENT,
                     "fp_simulate: need out_dir or out_store");
  }
  return guarded([&] {
    footprint::SimulationConfig config =
        options != nullptr ? options->config : footprint::SimulationConfig{};
    footprint::RunProvenance provenance;
    if (taxonomy != nullptr) {
      config.taxonomy = taxonomy->view;
      provenance.taxonomy_source = taxonomy->source;
    } else {
      config.taxonomy = &footprint::CategoryTaxonomy::bundled_default();
    }

    footprint::SessionStore store = footprint::run_simulate(config);
    if (out_dir != nullptr) {
      footprint::save_store(store, out_dir);
      footprint::write_manifest(out_dir, "simulate", store.sources,
                                footprint::sim_config_json(config, provenance));
    }
    if (out_store != nullptr) {
      auto handle = std::make_unique<fp_store>();
      handle->store = std::move(store);
      *out_store = handle.release();
    }
    return FP_OK;
  });
}

} /* extern "C" */
