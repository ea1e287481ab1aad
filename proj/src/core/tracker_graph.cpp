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

#include "core/tracker_graph.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace footprint {

void TrackerGraph::add_page(const std::string& page_url) {
  pages_.try_emplace(page_url);
}

void TrackerGraph::add_edge(const std::string& page_url,
                            const std::string& tracker) {
  pages_[page_url].insert(tracker);
  trackers_[tracker].insert(page_url);
}

size_t TrackerGraph::edge_count() const {
  size_t count = 0;
  for (const auto& [page, adjacent] : pages_) count += adjacent.size();
  return count;
}

TrackerGraph build_graph(const std::vector<BrowsingSession>& sessions,
                         const GraphOptions& options, FilterTally* tally) {
  TrackerGraph graph;
  for (const BrowsingSession& session : sessions) {
    for (const PageVisit& visit : session.visits) {
      graph.add_page(visit.page_url);
      for (const ThirdPartyRequest& request :
           extract_third_party_requests(visit, options.filter, tally)) {
        graph.add_edge(visit.page_url, options.by_host
                                           ? request.full_host
                                           : request.tracker_domain);
      }
    }
  }
  return graph;
}

double avg_neighbor_degree(const TrackerGraph& graph,
                           const std::string& tracker, size_t* isolated) {
  auto it = graph.trackers().find(tracker);
  if (it == graph.trackers().end()) {
    throw Error::input("unknown tracker node \"" + tracker + "\"");
  }
  const std::set<std::string>& neighbor_pages = it->second;
  if (neighbor_pages.empty()) {
    if (isolated != nullptr) ++*isolated;
    return 0.0;
  }
  // Integer sum divided once keeps the oracle comparison exact.
  size_t degree_sum = 0;
  for (const std::string& page : neighbor_pages) {
    degree_sum += graph.pages().at(page).size();
  }
  return static_cast<double>(degree_sum) /
         static_cast<double>(neighbor_pages.size());
}

std::vector<RankRow> rank_trackers(const TrackerGraph& graph,
                                   size_t* isolated) {
  std::vector<RankRow> rows;
  rows.reserve(graph.trackers().size());
  for (const auto& [tracker, pages] : graph.trackers()) {
    RankRow row;
    row.tracker_domain = tracker;
    row.avg_knn = avg_neighbor_degree(graph, tracker, isolated);
    row.degree = static_cast<int>(pages.size());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const RankRow& a, const RankRow& b) {
    if (a.avg_knn != b.avg_knn) return a.avg_knn > b.avg_knn;
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.tracker_domain < b.tracker_domain;
  });
  return rows;
}

}  // namespace footprint
