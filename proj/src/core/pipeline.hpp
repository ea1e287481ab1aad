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

#ifndef FOOTPRINT_CORE_PIPELINE_HPP_
#define FOOTPRINT_CORE_PIPELINE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/extract.hpp"
#include "core/metrics.hpp"
#include "core/profile.hpp"
#include "core/session.hpp"
#include "core/simulator.hpp"
#include "core/tracker_graph.hpp"

namespace footprint {

inline constexpr const char* kToolVersion = "0.1.0";

struct StoreSource {
  std::string path;
  std::string sha256;
};

// Loaded sessions plus the provenance needed for run manifests.
struct SessionStore {
  std::vector<BrowsingSession> sessions;
  std::vector<StoreSource> sources;
  size_t har_entries_skipped = 0;
};

// Ingest one capture file; the session's user id is the file stem.
// Throws Error{kInput} on parse failures (message names the file) and
// on duplicate user ids.
void store_add_har(SessionStore& store, const std::filesystem::path& file);
void store_add_session_log(SessionStore& store,
                           const std::filesystem::path& file);

// Reads every *.jsonl under dir (sorted by name). Throws
// Error{kInput} when none are found.
SessionStore load_store(const std::filesystem::path& dir);

// One <user_id>.jsonl per session; returns the paths written.
std::vector<std::filesystem::path> save_store(
    const SessionStore& store, const std::filesystem::path& dir);

// run_manifest.json: tool version, command, input digests, resolved
// config, creation timestamp (the only wall-clock value any command
// emits).
void write_manifest(const std::filesystem::path& out_dir,
                    std::string_view command,
                    const std::vector<StoreSource>& inputs,
                    const nlohmann::ordered_json& config);

// Sources used when the bundled data files are overridden; "bundled"
// otherwise.
struct RunProvenance {
  std::string taxonomy_source = "bundled";
  std::string stopwords_source = "bundled";
};

struct SummaryChange {
  std::optional<double> l1_pct;
  std::optional<double> l2_pct;
  std::optional<double> tv_pct;
};

struct AnalyzeStats {
  size_t users = 0;
  size_t visits = 0;
  FilterTally tally;
  size_t unmatched_user_terms = 0;
  size_t unmatched_ad_terms = 0;
  // First-present-to-last percent change of the population series.
  SummaryChange population_change;
};

// Writes profiles/<user>_user.csv and _ad.csv, series/<user>.csv,
// series/population.csv, summary.csv and run_manifest.json under
// out_dir. Throws Error{kInput} on an empty store.
AnalyzeStats run_analyze(const SessionStore& store,
                         const AnalyzerConfig& config,
                         const RunProvenance& provenance,
                         const std::filesystem::path& out_dir);

struct RankStats {
  size_t pages = 0;
  size_t trackers = 0;
  size_t edges = 0;
  size_t isolated = 0;
  FilterTally tally;
};

// Writes ranking.csv (top N rows), graph_edges.tsv and
// run_manifest.json under out_dir. Throws Error{kInput} on an empty
// store or top < 1.
RankStats run_rank(const SessionStore& store, const GraphOptions& options,
                   int top, const std::filesystem::path& out_dir);

// In-memory population synthesis; callers persist with save_store.
SessionStore run_simulate(const SimulationConfig& config);

nlohmann::ordered_json analyzer_config_json(const AnalyzerConfig& config,
                                            const RunProvenance& provenance);
nlohmann::ordered_json sim_config_json(const SimulationConfig& config,
                                       const RunProvenance& provenance);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_PIPELINE_HPP_
