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

#ifndef FOOTPRINT_CORE_REPORT_HPP_
#define FOOTPRINT_CORE_REPORT_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "core/metrics.hpp"
#include "core/profile.hpp"
#include "core/taxonomy.hpp"
#include "core/tracker_graph.hpp"

namespace footprint {

// Shortest-round-trip style double formatting ("%.12g"), the one
// number format used in every CSV.
std::string format_double(double value);

std::string csv_escape(std::string_view field);

// CSV with header `category,count,mass`, rows in taxonomy order.
// An empty profile renders zero counts with empty mass cells.
std::string profile_csv(const InterestProfile& profile,
                        const CategoryTaxonomy& taxonomy);

// CSV with header `user_id,visit_index,l1,l2,tv`; absent metrics
// render as empty cells.
std::string series_csv(const ConvergenceSeries& series);

// CSV with header `tracker_domain,avg_knn,degree`.
std::string ranking_csv(const std::vector<RankRow>& rows);

// Edge list `page<TAB>tracker`, one per line, sorted.
std::string edges_tsv(const TrackerGraph& graph);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

// Writes via a temp file in the same directory plus rename, creating
// parent directories. Throws Error{kInput} on filesystem failure.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

// Whole-file read; throws Error{kInput} naming the path.
std::string read_file(const std::filesystem::path& path);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_REPORT_HPP_
