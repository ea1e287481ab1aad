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

#include <unistd.h>

#include <filesystem>
#include <string>

#include <json.hpp>

#include "core/error.hpp"
#include "core/report.hpp"
#include "core/session_log.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

using footprint::AnalyzerConfig;
using footprint::AnalyzeStats;
using footprint::BrowsingSession;
using footprint::Error;
using footprint::GraphOptions;
using footprint::RankStats;
using footprint::RunProvenance;
using footprint::SessionStore;
using footprint::SimulationConfig;
using footprint::load_store;
using footprint::read_file;
using footprint::run_analyze;
using footprint::run_rank;
using footprint::run_simulate;
using footprint::save_store;
using footprint::store_add_session_log;
using footprint::write_file_atomic;
using footprint::write_session_log;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int n = 0;
    path = fs::temp_directory_path() /
           fs::path("footprint-pipe-" + std::to_string(::getpid()) + "-" +
                    std::to_string(n++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

SimulationConfig tiny_config() {
  SimulationConfig config;
  config.num_users = 3;
  config.pages_per_user = 5;
  config.tags_per_page = 12;
  config.params_per_page = 8;
  config.trackers_per_page = 2;
  return config;
}

}  // namespace

TEST_CASE("simulated stores survive a save and load round trip") {
  TempDir tmp;
  SessionStore store = run_simulate(tiny_config());
  REQUIRE(store.sessions.size() == 3);
  auto paths = save_store(store, tmp.path / "store");
  REQUIRE(paths.size() == 3);
  CHECK(paths[0].filename() == "user-0000.jsonl");

  SessionStore back = load_store(tmp.path / "store");
  REQUIRE(back.sessions.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(write_session_log(back.sessions[i]) ==
          write_session_log(store.sessions[i]));
  }
  REQUIRE(back.sources.size() == 3);
  CHECK(back.sources[0].sha256 ==
        footprint::sha256_hex(read_file(paths[0])));
}

TEST_CASE("load_store rejects missing or empty directories") {
  TempDir tmp;
  CHECK_THROWS_AS((void)load_store(tmp.path / "nowhere"), Error);
  fs::create_directories(tmp.path / "hollow");
  CHECK_THROWS_WITH_AS((void)load_store(tmp.path / "hollow"),
                       doctest::Contains("no session"), Error);
}

TEST_CASE("duplicate user ids across files are rejected") {
  TempDir tmp;
  const std::string log =
      "{\"type\":\"visit\",\"user\":\"dup\",\"index\":0,\"url\":\"http://a.example/\",\"text\":\"\",\"meta_keywords\":[]}\n";
  write_file_atomic(tmp.path / "store" / "a.jsonl", log);
  write_file_atomic(tmp.path / "store" / "b.jsonl", log);
  CHECK_THROWS_WITH_AS((void)load_store(tmp.path / "store"),
                       doctest::Contains("dup"), Error);
}

TEST_CASE("session log parse errors name the file") {
  TempDir tmp;
  write_file_atomic(tmp.path / "bad.jsonl", "{broken\n");
  SessionStore store;
  CHECK_THROWS_WITH_AS(store_add_session_log(store, tmp.path / "bad.jsonl"),
                       doctest::Contains("bad.jsonl"), Error);
}

TEST_CASE("save_store sanitises awkward user ids") {
  TempDir tmp;
  SessionStore store;
  BrowsingSession s;
  s.user_id = "we/ird user";
  footprint::PageVisit v;
  v.page_url = "http://a.example/";
  s.visits.push_back(v);
  store.sessions.push_back(s);
  auto paths = save_store(store, tmp.path / "store");
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].filename() == "we_ird_user.jsonl");
  CHECK(fs::exists(paths[0]));
}

TEST_CASE("run_analyze writes the full report tree") {
  TempDir tmp;
  SessionStore store = run_simulate(tiny_config());
  const fs::path out = tmp.path / "reports";
  AnalyzeStats stats = run_analyze(store, AnalyzerConfig{}, RunProvenance{}, out);

  CHECK(stats.users == 3);
  CHECK(stats.visits == 15);
  CHECK(stats.tally.emitted > 0);

  for (const char* name :
       {"profiles/user-0000_user.csv", "profiles/user-0000_ad.csv",
        "profiles/user-0002_user.csv", "series/user-0000.csv",
        "series/population.csv", "summary.csv", "run_manifest.json"}) {
    CHECK_MESSAGE(fs::exists(out / name), name);
  }

  const std::string population = read_file(out / "series/population.csv");
  CHECK(population.find("user_id,visit_index,l1,l2,tv") == 0);
  CHECK(population.find("population,0,") != std::string::npos);

  const std::string summary = read_file(out / "summary.csv");
  CHECK(summary.find("user_id,metric,first_visit,first_value,last_visit,"
                     "last_value,percent_change") == 0);
  CHECK(summary.find("population,l1,") != std::string::npos);
  CHECK(summary.find("user-0001,tv,") != std::string::npos);

  auto manifest = nlohmann::json::parse(read_file(out / "run_manifest.json"));
  CHECK(manifest["tool"] == "footprint");
  CHECK(manifest["command"] == "analyze");
  CHECK(manifest["inputs"].size() == 0);  // in-memory store, no files
  CHECK(manifest["config"]["taxonomy"] == "bundled");
  CHECK(manifest.contains("created_utc"));
}

TEST_CASE("run_analyze is deterministic apart from the manifest clock") {
  TempDir tmp;
  SessionStore store = run_simulate(tiny_config());
  run_analyze(store, AnalyzerConfig{}, RunProvenance{}, tmp.path / "a");
  run_analyze(store, AnalyzerConfig{}, RunProvenance{}, tmp.path / "b");
  for (const char* name :
       {"series/population.csv", "summary.csv", "profiles/user-0001_ad.csv"}) {
    CHECK(read_file(tmp.path / "a" / name) == read_file(tmp.path / "b" / name));
  }
}

TEST_CASE("run_analyze rejects an empty store") {
  TempDir tmp;
  SessionStore store;
  CHECK_THROWS_AS(
      (void)run_analyze(store, AnalyzerConfig{}, RunProvenance{}, tmp.path),
      Error);
}

TEST_CASE("run_rank writes a trimmed ranking and the edge list") {
  TempDir tmp;
  SessionStore store = run_simulate(tiny_config());
  const fs::path out = tmp.path / "rank";
  RankStats stats = run_rank(store, GraphOptions{}, 5, out);
  CHECK(stats.pages > 0);
  CHECK(stats.trackers > 0);
  CHECK(stats.edges > 0);

  const std::string ranking = read_file(out / "ranking.csv");
  size_t rows = 0;
  for (char c : ranking) rows += (c == '\n');
  CHECK(rows <= 6);  // header + top 5

  const std::string edges = read_file(out / "graph_edges.tsv");
  size_t edge_lines = 0;
  for (char c : edges) edge_lines += (c == '\n');
  CHECK(edge_lines == stats.edges);

  auto manifest = nlohmann::json::parse(read_file(out / "run_manifest.json"));
  CHECK(manifest["command"] == "rank");
  CHECK(manifest["config"]["top"] == 5);

  CHECK_THROWS_AS((void)run_rank(store, GraphOptions{}, 0, tmp.path / "r2"),
                  Error);
}
