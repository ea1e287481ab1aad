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

#ifndef FOOTPRINT_CORE_EXTRACT_HPP_
#define FOOTPRINT_CORE_EXTRACT_HPP_

#include <set>
#include <vector>

#include "core/session.hpp"
#include "core/suffix.hpp"

namespace footprint {

struct FilterOptions {
  // Static-asset kinds dropped before the domain comparison.
  std::set<ResourceKind> excluded_kinds = {
      ResourceKind::kScript,
      ResourceKind::kStylesheet,
      ResourceKind::kImage,
      ResourceKind::kFont,
  };
  const PublicSuffixTable* suffixes = &PublicSuffixTable::bundled();
};

// Every input request lands in exactly one bucket; the four counts
// sum to the number of requests seen.
struct FilterTally {
  size_t emitted = 0;
  size_t excluded_asset = 0;
  size_t excluded_same_domain = 0;
  size_t unparseable = 0;

  size_t total() const {
    return emitted + excluded_asset + excluded_same_domain + unparseable;
  }
};

// Keeps requests whose kind is not excluded and whose registrable
// domain differs from the page's. Parameters come out percent-decoded
// in URL order. Request URLs that fail to parse are skipped and
// tallied rather than raised; an unparseable page URL throws
// Error{kInput} since no domain comparison is possible.
std::vector<ThirdPartyRequest> extract_third_party_requests(
    const PageVisit& visit, const FilterOptions& options = {},
    FilterTally* tally = nullptr);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_EXTRACT_HPP_
