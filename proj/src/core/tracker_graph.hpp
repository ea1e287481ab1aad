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

#ifndef FOOTPRINT_CORE_TRACKER_GRAPH_HPP_
#define FOOTPRINT_CORE_TRACKER_GRAPH_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/extract.hpp"
#include "core/session.hpp"

namespace footprint {

// Bipartite page-tracker graph. Edges are deduplicated; the two
// adjacency maps mirror each other.
class TrackerGraph {
 public:
  void add_page(const std::string& page_url);
  void add_edge(const std::string& page_url, const std::string& tracker);

  size_t page_count() const { return pages_.size(); }
  size_t tracker_count() const { return trackers_.size(); }
  size_t edge_count() const;

  const std::map<std::string, std::set<std::string>>& pages() const {
    return pages_;
  }
  const std::map<std::string, std::set<std::string>>& trackers() const {
    return trackers_;
  }

 private:
  // page URL -> tracker set; tracker -> page set.
  std::map<std::string, std::set<std::string>> pages_;
  std::map<std::string, std::set<std::string>> trackers_;
};

struct GraphOptions {
  // Rank by full host instead of registrable domain.
  bool by_host = false;
  FilterOptions filter;
};

struct RankRow {
  std::string tracker_domain;
  double avg_knn = 0.0;
  int degree = 0;
};

// One page node per distinct page URL, one tracker node per distinct
// tracker identity, one edge per (page, tracker) pair with at least
// one surviving request.
TrackerGraph build_graph(const std::vector<BrowsingSession>& sessions,
                         const GraphOptions& options = {},
                         FilterTally* tally = nullptr);

// Mean page degree over the tracker's page neighbors. Throws
// Error{kInput} on an unknown tracker; an isolated tracker scores 0
// (optionally counted as a diagnostic).
double avg_neighbor_degree(const TrackerGraph& graph,
                           const std::string& tracker,
                           size_t* isolated = nullptr);

// All trackers sorted by avg_knn descending, ties by degree
// descending, then lexicographic.
std::vector<RankRow> rank_trackers(const TrackerGraph& graph,
                                   size_t* isolated = nullptr);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_TRACKER_GRAPH_HPP_
