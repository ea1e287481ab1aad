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

#ifndef FOOTPRINT_CORE_PROFILE_HPP_
#define FOOTPRINT_CORE_PROFILE_HPP_

#include <cstdint>
#include <vector>

#include "core/extract.hpp"
#include "core/session.hpp"
#include "core/stopwords.hpp"
#include "core/taxonomy.hpp"

namespace footprint {

// Absolute per-category tag counts.
struct InterestProfile {
  std::vector<int64_t> counts;
  int64_t total = 0;

  explicit InterestProfile(size_t categories = 0)
      : counts(categories, 0) {}
};

// Relative-frequency form; components sum to 1.
struct ProfilePMF {
  std::vector<double> mass;
};

InterestProfile add_tags(InterestProfile profile,
                         const std::vector<size_t>& categories);

// Throws Error{kInput} ("empty profile") when total is zero.
ProfilePMF normalize(const InterestProfile& profile);

enum class ProfileWindow {
  kCumulative,
  kPerVisit,
};

// Everything the per-visit tag extractors need.
struct AnalyzerConfig {
  const CategoryTaxonomy* taxonomy = &CategoryTaxonomy::bundled_default();
  const StopwordList* stopwords = &StopwordList::bundled_english();
  int max_phrase_len = 3;
  double rake_keep_fraction = 1.0 / 3.0;
  FilterOptions filter;
  ProfileWindow window = ProfileWindow::kCumulative;
};

// Category tags of one visit seen by the user side: kept RAKE phrases
// from page_text plus meta keywords, each classified; unmatched terms
// drop out (optionally counted).
std::vector<size_t> visit_user_tags(const PageVisit& visit,
                                    const AnalyzerConfig& config,
                                    size_t* unmatched = nullptr);

// Category tags of one visit seen by the ad side: parameters of its
// third-party requests. Values always go through classify; keys count
// only on an exact lexicon hit.
std::vector<size_t> visit_ad_tags(const PageVisit& visit,
                                  const AnalyzerConfig& config,
                                  size_t* unmatched = nullptr,
                                  FilterTally* tally = nullptr);

// Cumulative profiles over visits 0..=visit_index.
InterestProfile user_profile_upto(const BrowsingSession& session,
                                  int visit_index,
                                  const AnalyzerConfig& config);
InterestProfile ad_profile_upto(const BrowsingSession& session,
                                int visit_index, const AnalyzerConfig& config);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_PROFILE_HPP_
