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

#include "core/profile.hpp"

#include "core/error.hpp"
#include "core/rake.hpp"

namespace footprint {

InterestProfile add_tags(InterestProfile profile,
                         const std::vector<size_t>& categories) {
  for (size_t category : categories) {
    profile.counts.at(category) += 1;
    profile.total += 1;
  }
  return profile;
}

ProfilePMF normalize(const InterestProfile& profile) {
  if (profile.total <= 0) throw Error::input("empty profile");
  ProfilePMF pmf;
  pmf.mass.reserve(profile.counts.size());
  for (int64_t count : profile.counts) {
    pmf.mass.push_back(static_cast<double>(count) /
                       static_cast<double>(profile.total));
  }
  return pmf;
}

std::vector<size_t> visit_user_tags(const PageVisit& visit,
                                    const AnalyzerConfig& config,
                                    size_t* unmatched) {
  const CategoryTaxonomy& taxonomy = *config.taxonomy;
  std::vector<size_t> tags;

  auto keywords = take_top_fraction(
      rake_extract(visit.page_text, *config.stopwords, config.max_phrase_len),
      config.rake_keep_fraction);
  for (const ScoredKeyword& keyword : keywords) {
    if (auto category = taxonomy.classify(keyword.phrase)) {
      tags.push_back(*category);
    } else if (unmatched != nullptr) {
      ++*unmatched;
    }
  }
  for (const std::string& keyword : collect_meta_keywords(visit)) {
    if (auto category = taxonomy.classify(keyword)) {
      tags.push_back(*category);
    } else if (unmatched != nullptr) {
      ++*unmatched;
    }
  }
  return tags;
}

std::vector<size_t> visit_ad_tags(const PageVisit& visit,
                                  const AnalyzerConfig& config,
                                  size_t* unmatched, FilterTally* tally) {
  const CategoryTaxonomy& taxonomy = *config.taxonomy;
  std::vector<size_t> tags;
  for (const ThirdPartyRequest& request :
       extract_third_party_requests(visit, config.filter, tally)) {
    for (const auto& [key, value] : request.parameters) {
      if (auto category = taxonomy.exact_lookup(key)) {
        tags.push_back(*category);
      }
      if (auto category = taxonomy.classify(value)) {
        tags.push_back(*category);
      } else if (unmatched != nullptr && !value.empty()) {
        ++*unmatched;
      }
    }
  }
  return tags;
}

namespace {

InterestProfile profile_upto(
    const BrowsingSession& session, int visit_index,
    const AnalyzerConfig& config,
    std::vector<size_t> (*tags_of)(const PageVisit&, const AnalyzerConfig&,
                                   size_t*, FilterTally*)) {
  if (visit_index < 0 ||
      visit_index >= static_cast<int>(session.visits.size())) {
    throw Error::input("visit_index out of range");
  }
  InterestProfile profile(config.taxonomy->category_count());
  for (int i = 0; i <= visit_index; ++i) {
    profile = add_tags(std::move(profile),
                       tags_of(session.visits[static_cast<size_t>(i)], config,
                               nullptr, nullptr));
  }
  return profile;
}

std::vector<size_t> user_tags_adapter(const PageVisit& visit,
                                      const AnalyzerConfig& config,
                                      size_t* unmatched, FilterTally*) {
  return visit_user_tags(visit, config, unmatched);
}

}  // namespace

InterestProfile user_profile_upto(const BrowsingSession& session,
                                  int visit_index,
                                  const AnalyzerConfig& config) {
  return profile_upto(session, visit_index, config, &user_tags_adapter);
}

InterestProfile ad_profile_upto(const BrowsingSession& session,
                                int visit_index, const AnalyzerConfig& config) {
  return profile_upto(session, visit_index, config, &visit_ad_tags);
}

}  // namespace footprint
