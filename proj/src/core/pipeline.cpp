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

#include "core/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <set>

#include "core/error.hpp"
#include "core/har.hpp"
#include "core/report.hpp"
#include "core/session_log.hpp"

namespace footprint {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string sanitize_filename(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    bool safe = std::isalnum(static_cast<unsigned char>(c)) != 0 ||
                c == '.' || c == '_' || c == '-';
    out.push_back(safe ? c : '_');
  }
  if (out.empty() || out == "." || out == "..") out = "session";
  return out;
}

void check_duplicate_user(const SessionStore& store, const std::string& user,
                          const fs::path& file) {
  for (const BrowsingSession& session : store.sessions) {
    if (session.user_id == user) {
      throw Error::input("duplicate user id \"" + user + "\" from " +
                         file.string());
    }
  }
}

// Indices of store.sessions sorted by user id, the order every
// report iterates in.
std::vector<size_t> sorted_session_order(const SessionStore& store) {
  std::vector<size_t> order(store.sessions.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return store.sessions[a].user_id < store.sessions[b].user_id;
  });
  return order;
}

struct MetricSummary {
  std::optional<int> first_visit;
  std::optional<double> first_value;
  std::optional<int> last_visit;
  std::optional<double> last_value;
  std::optional<double> pct;
};

MetricSummary summarize_metric(const ConvergenceSeries& series,
                               std::optional<double> ConvergencePoint::*metric) {
  MetricSummary summary;
  for (const ConvergencePoint& point : series.points) {
    const std::optional<double>& value = point.*metric;
    if (!value) continue;
    if (!summary.first_value) {
      summary.first_visit = point.visit_index;
      summary.first_value = value;
    }
    summary.last_visit = point.visit_index;
    summary.last_value = value;
  }
  if (summary.first_value && *summary.first_value != 0.0) {
    summary.pct = (*summary.last_value - *summary.first_value) /
                  *summary.first_value * 100.0;
  }
  return summary;
}

void append_summary_row(std::string& csv, const std::string& user_id,
                        const char* metric, const MetricSummary& summary) {
  csv += csv_escape(user_id);
  csv += ',';
  csv += metric;
  csv += ',';
  if (summary.first_visit) csv += std::to_string(*summary.first_visit);
  csv += ',';
  if (summary.first_value) csv += format_double(*summary.first_value);
  csv += ',';
  if (summary.last_visit) csv += std::to_string(*summary.last_visit);
  csv += ',';
  if (summary.last_value) csv += format_double(*summary.last_value);
  csv += ',';
  if (summary.pct) csv += format_double(*summary.pct);
  csv += '\n';
}

void append_summary_rows(std::string& csv, const ConvergenceSeries& series,
                         SummaryChange* change = nullptr) {
  MetricSummary l1 = summarize_metric(series, &ConvergencePoint::l1);
  MetricSummary l2 = summarize_metric(series, &ConvergencePoint::l2);
  MetricSummary tv = summarize_metric(series, &ConvergencePoint::tv);
  append_summary_row(csv, series.user_id, "l1", l1);
  append_summary_row(csv, series.user_id, "l2", l2);
  append_summary_row(csv, series.user_id, "tv", tv);
  if (change != nullptr) {
    change->l1_pct = l1.pct;
    change->l2_pct = l2.pct;
    change->tv_pct = tv.pct;
  }
}

const char* to_string(ProfileWindow window) {
  return window == ProfileWindow::kCumulative ? "cumulative" : "per-visit";
}

ordered_json excluded_kinds_json(const FilterOptions& filter) {
  ordered_json kinds = ordered_json::array();
  for (ResourceKind kind : filter.excluded_kinds) {
    kinds.push_back(to_string(kind));
  }
  return kinds;
}

}  // namespace

void store_add_har(SessionStore& store, const fs::path& file) {
  std::string bytes = read_file(file);
  std::string user = file.stem().string();
  check_duplicate_user(store, user, file);
  ParseDiagnostics diagnostics;
  try {
    store.sessions.push_back(parse_har(bytes, user, &diagnostics));
  } catch (const Error& e) {
    throw Error(e.kind(), file.string() + ": " + e.what());
  }
  store.har_entries_skipped += diagnostics.skipped_entries;
  store.sources.push_back({file.string(), sha256_hex(bytes)});
}

void store_add_session_log(SessionStore& store, const fs::path& file) {
  std::string bytes = read_file(file);
  BrowsingSession session;
  try {
    session = parse_session_log(bytes);
  } catch (const Error& e) {
    throw Error(e.kind(), file.string() + ": " + e.what());
  }
  check_duplicate_user(store, session.user_id, file);
  store.sessions.push_back(std::move(session));
  store.sources.push_back({file.string(), sha256_hex(bytes)});
}

SessionStore load_store(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw Error::input("session store " + dir.string() +
                       " is not a directory");
  }
  std::vector<fs::path> files;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw Error::input("no session logs (*.jsonl) found in " + dir.string());
  }
  SessionStore store;
  for (const fs::path& file : files) {
    store_add_session_log(store, file);
  }
  return store;
}

std::vector<fs::path> save_store(const SessionStore& store,
                                 const fs::path& dir) {
  std::vector<fs::path> written;
  std::set<std::string> used;
  for (size_t index : sorted_session_order(store)) {
    const BrowsingSession& session = store.sessions[index];
    std::string base = sanitize_filename(session.user_id);
    std::string name = base;
    for (int n = 2; used.count(name) > 0; ++n) {
      name = base + "-" + std::to_string(n);
    }
    used.insert(name);
    fs::path path = dir / (name + ".jsonl");
    write_file_atomic(path, write_session_log(session));
    written.push_back(std::move(path));
  }
  return written;
}

void write_manifest(const fs::path& out_dir, std::string_view command,
                    const std::vector<StoreSource>& inputs,
                    const ordered_json& config) {
  ordered_json manifest;
  manifest["tool"] = "footprint";
  manifest["tool_version"] = kToolVersion;
  manifest["command"] = std::string(command);
  manifest["created_utc"] = utc_timestamp();
  ordered_json input_list = ordered_json::array();
  for (const StoreSource& source : inputs) {
    ordered_json item;
    item["path"] = source.path;
    item["sha256"] = source.sha256;
    input_list.push_back(std::move(item));
  }
  manifest["inputs"] = std::move(input_list);
  manifest["config"] = config;
  write_file_atomic(out_dir / "run_manifest.json", manifest.dump(2) + "\n");
}

ordered_json analyzer_config_json(const AnalyzerConfig& config,
                                  const RunProvenance& provenance) {
  ordered_json out;
  out["taxonomy"] = provenance.taxonomy_source;
  out["stopwords"] = provenance.stopwords_source;
  out["max_phrase_len"] = config.max_phrase_len;
  out["rake_keep_fraction"] = config.rake_keep_fraction;
  out["window"] = to_string(config.window);
  out["excluded_kinds"] = excluded_kinds_json(config.filter);
  return out;
}

ordered_json sim_config_json(const SimulationConfig& config,
                             const RunProvenance& provenance) {
  ordered_json out;
  out["seed"] = config.seed;
  out["users"] = config.num_users;
  out["pages"] = config.pages_per_user;
  out["taxonomy"] = provenance.taxonomy_source;
  out["responsiveness"] = config.responsiveness;
  out["tags_per_page"] = config.tags_per_page;
  out["params_per_page"] = config.params_per_page;
  out["trackers_per_page"] = config.trackers_per_page;
  return out;
}

AnalyzeStats run_analyze(const SessionStore& store,
                         const AnalyzerConfig& config,
                         const RunProvenance& provenance,
                         const fs::path& out_dir) {
  if (store.sessions.empty()) {
    throw Error::input("session store is empty");
  }
  size_t categories = config.taxonomy->category_count();

  AnalyzeStats stats;
  stats.users = store.sessions.size();

  std::vector<ConvergenceSeries> all_series;
  all_series.reserve(store.sessions.size());
  std::string summary = "user_id,metric,first_visit,first_value,last_visit,"
                        "last_value,percent_change\n";

  for (size_t index : sorted_session_order(store)) {
    const BrowsingSession& session = store.sessions[index];
    InterestProfile user_profile(categories);
    InterestProfile ad_profile(categories);
    for (const PageVisit& visit : session.visits) {
      ++stats.visits;
      user_profile = add_tags(
          std::move(user_profile),
          visit_user_tags(visit, config, &stats.unmatched_user_terms));
      ad_profile =
          add_tags(std::move(ad_profile),
                   visit_ad_tags(visit, config, &stats.unmatched_ad_terms,
                                 &stats.tally));
    }

    std::string base = sanitize_filename(session.user_id);
    write_file_atomic(out_dir / "profiles" / (base + "_user.csv"),
                      profile_csv(user_profile, *config.taxonomy));
    write_file_atomic(out_dir / "profiles" / (base + "_ad.csv"),
                      profile_csv(ad_profile, *config.taxonomy));

    ConvergenceSeries series = convergence_series(session, config);
    write_file_atomic(out_dir / "series" / (base + ".csv"),
                      series_csv(series));
    append_summary_rows(summary, series);
    all_series.push_back(std::move(series));
  }

  ConvergenceSeries population = population_average(all_series);
  write_file_atomic(out_dir / "series" / "population.csv",
                    series_csv(population));
  append_summary_rows(summary, population, &stats.population_change);

  write_file_atomic(out_dir / "summary.csv", summary);
  write_manifest(out_dir, "analyze", store.sources,
                 analyzer_config_json(config, provenance));
  return stats;
}

RankStats run_rank(const SessionStore& store, const GraphOptions& options,
                   int top, const fs::path& out_dir) {
  if (store.sessions.empty()) {
    throw Error::input("session store is empty");
  }
  if (top < 1) throw Error::input("--top must be >= 1");

  RankStats stats;
  TrackerGraph graph = build_graph(store.sessions, options, &stats.tally);
  std::vector<RankRow> rows = rank_trackers(graph, &stats.isolated);
  stats.pages = graph.page_count();
  stats.trackers = graph.tracker_count();
  stats.edges = graph.edge_count();

  if (rows.size() > static_cast<size_t>(top)) {
    rows.resize(static_cast<size_t>(top));
  }
  write_file_atomic(out_dir / "ranking.csv", ranking_csv(rows));
  write_file_atomic(out_dir / "graph_edges.tsv", edges_tsv(graph));

  ordered_json config;
  config["by_host"] = options.by_host;
  config["top"] = top;
  config["excluded_kinds"] = excluded_kinds_json(options.filter);
  write_manifest(out_dir, "rank", store.sources, config);
  return stats;
}

SessionStore run_simulate(const SimulationConfig& config) {
  SessionStore store;
  store.sessions = simulate_population(config);
  return store;
}

}  // namespace footprint
