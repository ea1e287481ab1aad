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

#include "core/extract.hpp"

#include <utility>

#include "core/error.hpp"
#include "core/url.hpp"

namespace footprint {

std::vector<ThirdPartyRequest> extract_third_party_requests(
    const PageVisit& visit, const FilterOptions& options, FilterTally* tally) {
  const PublicSuffixTable& suffixes = *options.suffixes;

  auto page = parse_url(visit.page_url);
  if (!page || page->host.empty()) {
    throw Error::input("page URL \"" + visit.page_url + "\" does not parse");
  }
  std::string page_domain = suffixes.registrable_domain(page->host);

  std::vector<ThirdPartyRequest> out;
  for (const HttpRequestRecord& record : visit.requests) {
    // Rule precedence: asset kind, then parseability, then domain.
    if (options.excluded_kinds.count(record.kind) > 0) {
      if (tally != nullptr) ++tally->excluded_asset;
      continue;
    }
    auto url = parse_url(record.url);
    if (!url || url->host.empty()) {
      if (tally != nullptr) ++tally->unparseable;
      continue;
    }
    std::string domain = suffixes.registrable_domain(url->host);
    if (domain == page_domain) {
      if (tally != nullptr) ++tally->excluded_same_domain;
      continue;
    }
    ThirdPartyRequest request;
    request.origin_page = visit.page_url;
    request.tracker_domain = std::move(domain);
    request.full_host = url->host;
    request.parameters = url_parameters(*url);
    out.push_back(std::move(request));
    if (tally != nullptr) ++tally->emitted;
  }
  return out;
}

}  // namespace footprint
