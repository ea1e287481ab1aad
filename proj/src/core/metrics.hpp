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

#ifndef FOOTPRINT_CORE_METRICS_HPP_
#define FOOTPRINT_CORE_METRICS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "core/profile.hpp"

namespace footprint {

// All three throw Error{kInternal} on length mismatch.
double l1_distance(const ProfilePMF& p, const ProfilePMF& q);
double l2_distance(const ProfilePMF& p, const ProfilePMF& q);
// Exactly l1_distance(p, q) / 2, same expression tree.
double tv_distance(const ProfilePMF& p, const ProfilePMF& q);

// Metrics are absent when either profile at that visit was empty.
struct ConvergencePoint {
  int visit_index = 0;
  std::optional<double> l1;
  std::optional<double> l2;
  std::optional<double> tv;
};

struct ConvergenceSeries {
  std::string user_id;
  std::vector<ConvergencePoint> points;
};

// Distance between the cumulative user and ad profiles after each
// visit. With ProfileWindow::kPerVisit the ad profile covers only the
// current visit instead of the prefix.
ConvergenceSeries convergence_series(const BrowsingSession& session,
                                     const AnalyzerConfig& config);

// Pointwise mean over series with a present value at each index;
// absent only where all inputs are absent. Throws Error{kInput} on an
// empty list.
ConvergenceSeries population_average(
    const std::vector<ConvergenceSeries>& series);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_METRICS_HPP_
