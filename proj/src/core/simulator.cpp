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

#include "core/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "core/error.hpp"
#include "core/url.hpp"

namespace footprint {

namespace {

constexpr uint64_t kPurposeBias = 1;
constexpr uint64_t kPurposePageTags = 2;
constexpr uint64_t kPurposeAdParams = 3;
constexpr uint64_t kPurposeRequests = 4;

uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::array<const char*, 12> kTrackerHosts = {
    "px.adroute66.example",      "beacon.trackermill.example",
    "sync.pixelbarn.example",    "ads.clickfield.example",
    "tags.metricfox.example",    "collect.adnexus-hub.example",
    "rt.bidstream-media.example", "stats.pageglow.example",
    "cdn.promobeacon.example",   "api.audiencely.example",
    "hub.retargetly.example",    "edge.admagnet.example",
};

constexpr std::array<const char*, 10> kSiteHosts = {
    "www.dailybugle.example",     "www.morningledger.example",
    "portal.newsroom7.example",   "www.hobbyist-hq.example",
    "blog.kitchenlore.example",   "www.fieldnotes-mag.example",
    "shop.gadgetrow.example",     "www.travelgazer.example",
    "forum.healthwise-talk.example", "www.cityarts-review.example",
};

constexpr std::array<const char*, 5> kParamKeys = {"kw", "q", "term", "topic",
                                                   "cat"};

void validate(const SimulationConfig& config) {
  if (config.num_users < 1) throw Error::input("num_users must be >= 1");
  if (config.pages_per_user < 1) {
    throw Error::input("pages_per_user must be >= 1");
  }
  if (config.responsiveness < 0.0 || config.responsiveness > 1.0) {
    throw Error::input("responsiveness must be in [0, 1]");
  }
  if (config.tags_per_page < 1) {
    throw Error::input("tags_per_page must be >= 1");
  }
  if (config.params_per_page < 0) {
    throw Error::input("params_per_page must be >= 0");
  }
  if (config.trackers_per_page < 1) {
    throw Error::input("trackers_per_page must be >= 1");
  }
  const CategoryTaxonomy& taxonomy = *config.taxonomy;
  for (size_t l = 0; l < taxonomy.category_count(); ++l) {
    if (taxonomy.terms_for(l).empty()) {
      throw Error::input("taxonomy category \"" + taxonomy.category_name(l) +
                         "\" has no lexicon terms to emit");
    }
  }
}

// Terms for `count` tags of category l, cycling the lexicon.
void emit_terms(const CategoryTaxonomy& taxonomy, size_t l, int64_t count,
                std::vector<std::string>& out) {
  const std::vector<std::string>& terms = taxonomy.terms_for(l);
  for (int64_t j = 0; j < count; ++j) {
    out.push_back(terms[static_cast<size_t>(j) % terms.size()]);
  }
}

std::string format_user_id(size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "user-%04zu", index);
  return buf;
}

}  // namespace

CounterRng::CounterRng(uint64_t seed, uint64_t purpose, uint64_t user,
                       uint64_t visit) {
  uint64_t key = mix64(seed);
  key = mix64(key ^ purpose);
  key = mix64(key ^ (user + 1));
  key = mix64(key ^ (visit + 1));
  state_ = key;
}

uint64_t CounterRng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  uint64_t x = state_;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double CounterRng::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

uint64_t CounterRng::next_below(uint64_t n) {
  return static_cast<uint64_t>(
      (static_cast<unsigned __int128>(next()) * n) >> 64);
}

std::vector<int64_t> quota_counts(const std::vector<double>& weights,
                                  int64_t total, CounterRng& rng) {
  size_t L = weights.size();
  std::vector<int64_t> counts(L, 0);
  std::vector<double> fractions(L, 0.0);
  int64_t assigned = 0;
  for (size_t l = 0; l < L; ++l) {
    double exact = weights[l] * static_cast<double>(total);
    counts[l] = static_cast<int64_t>(std::floor(exact));
    fractions[l] = exact - std::floor(exact);
    assigned += counts[l];
  }
  int64_t deficit = total - assigned;

  std::vector<size_t> order(L);
  for (size_t l = 0; l < L; ++l) order[l] = l;
  for (size_t i = L; i > 1; --i) {
    size_t j = static_cast<size_t>(rng.next_below(i));
    std::swap(order[i - 1], order[j]);
  }
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return fractions[a] > fractions[b];
  });
  for (int64_t d = 0; d < deficit; ++d) {
    counts[order[static_cast<size_t>(d) % L]] += 1;
  }
  return counts;
}

SimulatedUser draw_user(const SimulationConfig& config, size_t user_index) {
  size_t L = config.taxonomy->category_count();
  CounterRng rng(config.seed, kPurposeBias, user_index, 0);
  SimulatedUser user;
  user.index = user_index;
  user.bias.mass.resize(L);
  double sum = 0.0;
  for (size_t l = 0; l < L; ++l) {
    double e = -std::log(1.0 - rng.next_double());
    user.bias.mass[l] = e;
    sum += e;
  }
  for (size_t l = 0; l < L; ++l) user.bias.mass[l] /= sum;
  return user;
}

BrowsingSession simulate_session(const SimulationConfig& config,
                                 const SimulatedUser& user) {
  validate(config);
  const CategoryTaxonomy& taxonomy = *config.taxonomy;
  size_t L = taxonomy.category_count();
  if (user.bias.mass.size() != L) {
    throw Error::input("user bias length does not match the taxonomy");
  }

  BrowsingSession session;
  session.user_id = format_user_id(user.index);
  session.visits.reserve(static_cast<size_t>(config.pages_per_user));

  // Tags emitted so far; what the ad side has observed.
  std::vector<int64_t> history(L, 0);
  int64_t history_total = 0;

  for (int k = 0; k < config.pages_per_user; ++k) {
    auto visit_no = static_cast<uint64_t>(k);

    // Ad mixture from the prefix 0..k-1, before this page's tags land.
    std::vector<double> ad_weights(L, 1.0 / static_cast<double>(L));
    if (config.responsiveness > 0.0 && history_total > 0) {
      double r = config.responsiveness;
      for (size_t l = 0; l < L; ++l) {
        double p = static_cast<double>(history[l]) /
                   static_cast<double>(history_total);
        ad_weights[l] = r * p + (1.0 - r) / static_cast<double>(L);
      }
    }
    std::vector<std::string> param_terms;
    if (config.params_per_page > 0) {
      CounterRng ad_rng(config.seed, kPurposeAdParams, user.index, visit_no);
      std::vector<int64_t> param_counts =
          quota_counts(ad_weights, config.params_per_page, ad_rng);
      for (size_t l = 0; l < L; ++l) {
        emit_terms(taxonomy, l, param_counts[l], param_terms);
      }
    }

    CounterRng tag_rng(config.seed, kPurposePageTags, user.index, visit_no);
    std::vector<int64_t> tag_counts =
        quota_counts(user.bias.mass, config.tags_per_page, tag_rng);
    std::vector<std::string> page_tags;
    page_tags.reserve(static_cast<size_t>(config.tags_per_page));
    for (size_t l = 0; l < L; ++l) {
      emit_terms(taxonomy, l, tag_counts[l], page_tags);
      history[l] += tag_counts[l];
      history_total += tag_counts[l];
    }

    CounterRng req_rng(config.seed, kPurposeRequests, user.index, visit_no);
    const char* site = kSiteHosts[req_rng.next_below(kSiteHosts.size())];
    char path[48];
    std::snprintf(path, sizeof(path), "/articles/u%zu-v%d", user.index, k);

    PageVisit visit;
    visit.visit_index = k;
    visit.page_url = std::string("https://") + site + path;
    visit.meta_keywords = std::move(page_tags);

    // The page's own assets; excluded downstream but kept for realism.
    HttpRequestRecord own_script;
    own_script.url = std::string("https://") + site + "/static/app.js";
    own_script.kind = ResourceKind::kScript;
    own_script.response_mime = "application/javascript";
    visit.requests.push_back(std::move(own_script));
    HttpRequestRecord own_image;
    own_image.url = std::string("https://") + site + "/static/banner.png";
    own_image.kind = ResourceKind::kImage;
    own_image.response_mime = "image/png";
    visit.requests.push_back(std::move(own_image));

    std::vector<std::string> hosts(
        static_cast<size_t>(config.trackers_per_page));
    for (std::string& host : hosts) {
      host = kTrackerHosts[req_rng.next_below(kTrackerHosts.size())];
    }
    for (size_t t = 0; t < hosts.size(); ++t) {
      std::string query;
      for (size_t j = t; j < param_terms.size(); j += hosts.size()) {
        if (!query.empty()) query.push_back('&');
        query += kParamKeys[j % kParamKeys.size()];
        query.push_back('=');
        query += percent_encode(param_terms[j]);
      }
      HttpRequestRecord request;
      request.url = "https://" + hosts[t] + "/collect";
      if (!query.empty()) request.url += "?" + query;
      request.kind = ResourceKind::kXhr;
      request.response_mime = "application/json";
      visit.requests.push_back(std::move(request));
    }

    session.visits.push_back(std::move(visit));
  }
  return session;
}

std::vector<BrowsingSession> simulate_population(
    const SimulationConfig& config) {
  validate(config);
  std::vector<BrowsingSession> sessions;
  sessions.reserve(static_cast<size_t>(config.num_users));
  for (int u = 0; u < config.num_users; ++u) {
    sessions.push_back(
        simulate_session(config, draw_user(config, static_cast<size_t>(u))));
  }
  return sessions;
}

}  // namespace footprint
