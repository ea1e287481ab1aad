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

// footprint: offline analysis of third-party tracking in captured
// browsing sessions. Thin shell over the C API in
// footprint/footprint.h; exit codes are 0 (ok), 2 (usage or input
// error), 3 (internal error).

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "footprint/footprint.h"

namespace {

namespace fs = std::filesystem;

template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, std::integral_constant<void (*)(T*), Free>>;

using TaxonomyHandle = Handle<fp_taxonomy, fp_taxonomy_free>;
using StoreHandle = Handle<fp_store, fp_store_free>;
using AnalysisOptionsHandle =
    Handle<fp_analysis_options, fp_analysis_options_free>;
using RankOptionsHandle = Handle<fp_rank_options, fp_rank_options_free>;
using SimOptionsHandle = Handle<fp_sim_options, fp_sim_options_free>;

int exit_code(fp_rc rc) {
  switch (rc) {
    case FP_OK:
      return 0;
    case FP_ERR_ARGUMENT:
    case FP_ERR_INPUT:
      return 2;
    case FP_ERR_INTERNAL:
      return 3;
  }
  return 3;
}

// Prints the library's error message and maps the code; use as
// `return fail(rc);` after any failing call.
int fail(fp_rc rc) {
  std::fprintf(stderr, "footprint: %s\n", fp_last_error());
  return exit_code(rc);
}

int fail_usage(const std::string& message) {
  std::fprintf(stderr, "footprint: %s\n", message.c_str());
  return 2;
}

TaxonomyHandle open_taxonomy(const std::string& path, fp_rc& rc) {
  fp_taxonomy* raw = nullptr;
  rc = path.empty() ? fp_taxonomy_default(&raw)
                    : fp_taxonomy_load_file(path.c_str(), &raw);
  return TaxonomyHandle(raw);
}

// Expands directories into their capture files, sorted for
// deterministic ingest order.
std::vector<fs::path> collect_inputs(const std::vector<std::string>& paths,
                                     const std::string& extension,
                                     std::string& error) {
  std::vector<fs::path> files;
  for (const std::string& raw : paths) {
    fs::path path(raw);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<fs::path> found;
      for (const fs::directory_entry& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() &&
            entry.path().extension() == extension) {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::exists(path, ec)) {
      files.push_back(path);
    } else {
      error = "no such input: " + raw;
      return {};
    }
  }
  if (files.empty() && error.empty()) {
    error = "no inputs (expected " + extension + " files)";
  }
  return files;
}

struct IngestArgs {
  std::vector<std::string> inputs;
  std::string format = "har";
  std::string out;
};

int run_ingest(const IngestArgs& args) {
  std::string error;
  std::vector<fs::path> files = collect_inputs(
      args.inputs, args.format == "har" ? ".har" : ".jsonl", error);
  if (!error.empty()) return fail_usage(error);

  fp_store* raw = nullptr;
  if (fp_rc rc = fp_store_new(&raw); rc != FP_OK) return fail(rc);
  StoreHandle store(raw);

  for (const fs::path& file : files) {
    fp_rc rc = args.format == "har"
                   ? fp_store_add_har(store.get(), file.c_str())
                   : fp_store_add_session_log(store.get(), file.c_str());
    if (rc != FP_OK) return fail(rc);
  }
  if (fp_rc rc =
          fp_store_save(store.get(), args.out.c_str(), args.format.c_str());
      rc != FP_OK) {
    return fail(rc);
  }

  fp_store_stats stats{};
  fp_store_get_stats(store.get(), &stats);
  std::printf("ingested %zu sessions (%zu visits, %zu requests) -> %s\n",
              stats.sessions, stats.visits, stats.requests,
              args.out.c_str());
  if (stats.har_entries_skipped > 0) {
    std::printf("skipped %zu entries (bad page reference or URL)\n",
                stats.har_entries_skipped);
  }
  return 0;
}

struct AnalyzeArgs {
  std::string store_dir;
  std::string out;
  std::string taxonomy;
  std::string stopwords;
  int max_phrase_len = 3;
  double rake_keep_fraction = 1.0 / 3.0;
  std::string window = "cumulative";
  std::string exclude_kinds = "script,stylesheet,image,font";
};

int run_analyze(const AnalyzeArgs& args) {
  fp_store* raw_store = nullptr;
  if (fp_rc rc = fp_store_open(args.store_dir.c_str(), &raw_store);
      rc != FP_OK) {
    return fail(rc);
  }
  StoreHandle store(raw_store);

  fp_rc rc = FP_OK;
  TaxonomyHandle taxonomy = open_taxonomy(args.taxonomy, rc);
  if (rc != FP_OK) return fail(rc);

  fp_analysis_options* raw_options = nullptr;
  if (rc = fp_analysis_options_new(&raw_options); rc != FP_OK) return fail(rc);
  AnalysisOptionsHandle options(raw_options);
  if (!args.stopwords.empty()) {
    rc = fp_analysis_options_set_stopwords_file(options.get(),
                                                args.stopwords.c_str());
    if (rc != FP_OK) return fail(rc);
  }
  if (rc = fp_analysis_options_set_max_phrase_len(options.get(),
                                                  args.max_phrase_len);
      rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_analysis_options_set_rake_keep_fraction(
          options.get(), args.rake_keep_fraction);
      rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_analysis_options_set_window(options.get(), args.window.c_str());
      rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_analysis_options_set_excluded_kinds(options.get(),
                                                  args.exclude_kinds.c_str());
      rc != FP_OK) {
    return fail(rc);
  }

  fp_analysis_stats stats{};
  rc = fp_analyze(store.get(), taxonomy.get(), options.get(),
                  args.out.c_str(), &stats);
  if (rc != FP_OK) return fail(rc);

  std::printf("analyzed %zu users, %zu visits\n", stats.users, stats.visits);
  std::printf(
      "third-party requests: %zu emitted, %zu asset-excluded, "
      "%zu same-domain, %zu unparseable\n",
      stats.requests_emitted, stats.requests_excluded_asset,
      stats.requests_excluded_same_domain, stats.requests_unparseable);
  std::printf("unclassified terms: %zu page-side, %zu ad-side\n",
              stats.unmatched_user_terms, stats.unmatched_ad_terms);
  auto print_change = [](const char* name, double pct) {
    if (pct == pct) {
      std::printf("population %s change: %+.2f%%\n", name, pct);
    } else {
      std::printf("population %s change: n/a\n", name);
    }
  };
  print_change("l1", stats.population_l1_change_pct);
  print_change("l2", stats.population_l2_change_pct);
  std::printf("reports -> %s\n", args.out.c_str());
  return 0;
}

struct RankArgs {
  std::string store_dir;
  std::string out;
  bool by_host = false;
  int top = 20;
  std::string exclude_kinds = "script,stylesheet,image,font";
};

int run_rank(const RankArgs& args) {
  fp_store* raw_store = nullptr;
  if (fp_rc rc = fp_store_open(args.store_dir.c_str(), &raw_store);
      rc != FP_OK) {
    return fail(rc);
  }
  StoreHandle store(raw_store);

  fp_rank_options* raw_options = nullptr;
  fp_rc rc = fp_rank_options_new(&raw_options);
  if (rc != FP_OK) return fail(rc);
  RankOptionsHandle options(raw_options);
  if (rc = fp_rank_options_set_by_host(options.get(), args.by_host ? 1 : 0);
      rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_rank_options_set_top(options.get(), args.top); rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_rank_options_set_excluded_kinds(options.get(),
                                              args.exclude_kinds.c_str());
      rc != FP_OK) {
    return fail(rc);
  }

  fp_rank_stats stats{};
  rc = fp_rank(store.get(), options.get(), args.out.c_str(), &stats);
  if (rc != FP_OK) return fail(rc);

  std::printf("graph: %zu pages, %zu trackers, %zu edges", stats.pages,
              stats.trackers, stats.edges);
  if (stats.isolated > 0) {
    std::printf(" (%zu isolated trackers)", stats.isolated);
  }
  std::printf("\nranking -> %s\n", args.out.c_str());
  return 0;
}

struct SimulateArgs {
  std::string out;
  std::string taxonomy;
  uint64_t seed = 42;
  int users = 86;
  int pages = 15;
  double responsiveness = 0.9;
  int tags_per_page = 80;
  int params_per_page = 60;
  int trackers_per_page = 3;
};

// FOOTPRINT_SEED, when set, wins over --seed.
bool apply_seed_env(SimulateArgs& args, std::string& error) {
  const char* env = std::getenv("FOOTPRINT_SEED");
  if (env == nullptr || *env == '\0') return true;
  errno = 0;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0') {
    error = std::string("FOOTPRINT_SEED is not an unsigned integer: ") + env;
    return false;
  }
  args.seed = value;
  return true;
}

int run_simulate(SimulateArgs args) {
  std::string error;
  if (!apply_seed_env(args, error)) return fail_usage(error);

  fp_rc rc = FP_OK;
  TaxonomyHandle taxonomy = open_taxonomy(args.taxonomy, rc);
  if (rc != FP_OK) return fail(rc);

  fp_sim_options* raw_options = nullptr;
  if (rc = fp_sim_options_new(&raw_options); rc != FP_OK) return fail(rc);
  SimOptionsHandle options(raw_options);
  if (rc = fp_sim_options_set_seed(options.get(), args.seed); rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_sim_options_set_users(options.get(), args.users); rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_sim_options_set_pages(options.get(), args.pages); rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_sim_options_set_responsiveness(options.get(),
                                             args.responsiveness);
      rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_sim_options_set_tags_per_page(options.get(),
                                            args.tags_per_page);
      rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_sim_options_set_params_per_page(options.get(),
                                              args.params_per_page);
      rc != FP_OK) {
    return fail(rc);
  }
  if (rc = fp_sim_options_set_trackers_per_page(options.get(),
                                                args.trackers_per_page);
      rc != FP_OK) {
    return fail(rc);
  }

  rc = fp_simulate(options.get(), taxonomy.get(), args.out.c_str(), nullptr);
  if (rc != FP_OK) return fail(rc);

  std::printf(
      "simulated %d users x %d pages (seed %llu, responsiveness %g) -> %s\n",
      args.users, args.pages, static_cast<unsigned long long>(args.seed),
      args.responsiveness, args.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"offline third-party tracking analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("footprint ") + fp_version());

  IngestArgs ingest_args;
  CLI::App* ingest = app.add_subcommand(
      "ingest", "convert captures into a session-log store");
  ingest->add_option("inputs", ingest_args.inputs,
                     "capture files or directories")
      ->required();
  ingest->add_option("--format", ingest_args.format, "input format")
      ->check(CLI::IsMember({"har", "jsonl"}))
      ->capture_default_str();
  ingest->add_option("--out", ingest_args.out, "output store directory")
      ->required();

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "profiles, convergence series and summary reports");
  analyze->add_option("store", analyze_args.store_dir,
                      "session store directory")
      ->required();
  analyze->add_option("--out", analyze_args.out, "report directory")
      ->required();
  analyze->add_option("--taxonomy", analyze_args.taxonomy,
                      "taxonomy file (default: bundled)");
  analyze->add_option("--stopwords", analyze_args.stopwords,
                      "stopword list file (default: bundled)");
  analyze->add_option("--max-phrase-len", analyze_args.max_phrase_len,
                      "keyword phrase length cap")
      ->capture_default_str();
  analyze->add_option("--rake-keep-fraction",
                      analyze_args.rake_keep_fraction,
                      "fraction of candidate keywords kept per page")
      ->capture_default_str();
  analyze->add_option("--window", analyze_args.window,
                      "ad-profile window")
      ->check(CLI::IsMember({"cumulative", "per-visit"}))
      ->capture_default_str();
  analyze->add_option("--exclude-kinds", analyze_args.exclude_kinds,
                      "comma-separated resource kinds to drop")
      ->capture_default_str();

  RankArgs rank_args;
  CLI::App* rank = app.add_subcommand(
      "rank", "tracker ranking by average nearest-neighbor degree");
  rank->add_option("store", rank_args.store_dir, "session store directory")
      ->required();
  rank->add_option("--out", rank_args.out, "report directory")->required();
  rank->add_flag("--by-host", rank_args.by_host,
                 "rank full hosts instead of registrable domains");
  rank->add_option("--top", rank_args.top, "rows to keep in ranking.csv")
      ->capture_default_str();
  rank->add_option("--exclude-kinds", rank_args.exclude_kinds,
                   "comma-separated resource kinds to drop")
      ->capture_default_str();

  SimulateArgs sim_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "generate a synthetic session store");
  simulate->add_option("--out", sim_args.out, "output store directory")
      ->required();
  simulate->add_option("--taxonomy", sim_args.taxonomy,
                       "taxonomy file (default: bundled)");
  simulate->add_option("--seed", sim_args.seed,
                       "RNG seed (FOOTPRINT_SEED overrides)")
      ->capture_default_str();
  simulate->add_option("--users", sim_args.users, "number of users")
      ->capture_default_str();
  simulate->add_option("--pages", sim_args.pages, "pages per user")
      ->capture_default_str();
  simulate->add_option("--responsiveness", sim_args.responsiveness,
                       "ad-service feedback weight in [0,1]")
      ->capture_default_str();
  simulate->add_option("--tags-per-page", sim_args.tags_per_page,
                       "page keywords per visit")
      ->capture_default_str();
  simulate->add_option("--params-per-page", sim_args.params_per_page,
                       "tracker URL parameters per visit")
      ->capture_default_str();
  simulate->add_option("--trackers-per-page", sim_args.trackers_per_page,
                       "tracker requests per visit")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (ingest->parsed()) return run_ingest(ingest_args);
  if (analyze->parsed()) return run_analyze(analyze_args);
  if (rank->parsed()) return run_rank(rank_args);
  if (simulate->parsed()) return run_simulate(sim_args);
  return 2;
}
