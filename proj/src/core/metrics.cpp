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

#include "core/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include "core/error.hpp"

namespace footprint {

namespace {

void check_lengths(const ProfilePMF& p, const ProfilePMF& q) {
  if (p.mass.size() != q.mass.size()) {
    throw Error::internal("PMF length mismatch: " +
                          std::to_string(p.mass.size()) + " vs " +
                          std::to_string(q.mass.size()));
  }
}

}  // namespace

double l1_distance(const ProfilePMF& p, const ProfilePMF& q) {
  check_lengths(p, q);
  double sum = 0.0;
  for (size_t l = 0; l < p.mass.size(); ++l) {
    sum += std::abs(p.mass[l] - q.mass[l]);
  }
  return sum;
}

double l2_distance(const ProfilePMF& p, const ProfilePMF& q) {
  check_lengths(p, q);
  double sum = 0.0;
  for (size_t l = 0; l < p.mass.size(); ++l) {
    double d = p.mass[l] - q.mass[l];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double tv_distance(const ProfilePMF& p, const ProfilePMF& q) {
  return l1_distance(p, q) / 2.0;
}

ConvergenceSeries convergence_series(const BrowsingSession& session,
                                     const AnalyzerConfig& config) {
  ConvergenceSeries series;
  series.user_id = session.user_id;
  series.points.reserve(session.visits.size());

  size_t categories = config.taxonomy->category_count();
  InterestProfile user(categories);
  InterestProfile ad(categories);

  for (const PageVisit& visit : session.visits) {
    user = add_tags(std::move(user), visit_user_tags(visit, config));
    std::vector<size_t> ad_tags = visit_ad_tags(visit, config);
    if (config.window == ProfileWindow::kPerVisit) {
      ad = add_tags(InterestProfile(categories), ad_tags);
    } else {
      ad = add_tags(std::move(ad), ad_tags);
    }

    ConvergencePoint point;
    point.visit_index = visit.visit_index;
    if (user.total > 0 && ad.total > 0) {
      ProfilePMF p = normalize(user);
      ProfilePMF q = normalize(ad);
      point.l1 = l1_distance(p, q);
      point.l2 = l2_distance(p, q);
      point.tv = tv_distance(p, q);
    }
    series.points.push_back(point);
  }
  return series;
}

ConvergenceSeries population_average(
    const std::vector<ConvergenceSeries>& series) {
  if (series.empty()) {
    throw Error::input("population average needs at least one series");
  }

  struct Accumulator {
    double sum = 0.0;
    size_t n = 0;

    void add(const std::optional<double>& value) {
      if (value) {
        sum += *value;
        ++n;
      }
    }
    std::optional<double> mean() const {
      if (n == 0) return std::nullopt;
      return sum / static_cast<double>(n);
    }
  };
  struct PointAccumulator {
    Accumulator l1, l2, tv;
  };

  std::map<int, PointAccumulator> by_index;
  for (const ConvergenceSeries& one : series) {
    for (const ConvergencePoint& point : one.points) {
      PointAccumulator& acc = by_index[point.visit_index];
      acc.l1.add(point.l1);
      acc.l2.add(point.l2);
      acc.tv.add(point.tv);
    }
  }

  ConvergenceSeries out;
  out.user_id = "population";
  out.points.reserve(by_index.size());
  for (const auto& [visit_index, acc] : by_index) {
    ConvergencePoint point;
    point.visit_index = visit_index;
    point.l1 = acc.l1.mean();
    point.l2 = acc.l2.mean();
    point.tv = acc.tv.mean();
    out.points.push_back(point);
  }
  return out;
}

}  // namespace footprint
