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

#ifndef FOOTPRINT_CORE_SESSION_HPP_
#define FOOTPRINT_CORE_SESSION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace footprint {

enum class ResourceKind {
  kDocument,
  kScript,
  kStylesheet,
  kImage,
  kFont,
  kMedia,
  kXhr,
  kOther,
};

const char* to_string(ResourceKind kind);
std::optional<ResourceKind> resource_kind_from_string(std::string_view name);

// Infers the resource kind from the response MIME type first and the
// URL path extension second; anything unrecognized is kOther.
ResourceKind infer_resource_kind(std::string_view url,
                                 const std::optional<std::string>& mime);

// One recorded HTTP request issued while rendering a page.
struct HttpRequestRecord {
  std::string url;
  ResourceKind kind = ResourceKind::kOther;
  std::optional<std::string> response_mime;
};

// One page visit: the page itself plus every request recorded for it.
struct PageVisit {
  std::string page_url;
  int visit_index = 0;
  std::string page_text;
  std::vector<std::string> meta_keywords;
  std::vector<HttpRequestRecord> requests;
};

// An ordered series of page visits by a single user identity.
struct BrowsingSession {
  std::string user_id;
  std::vector<PageVisit> visits;
};

// A request that survived the third-party filters, with its decoded
// URL parameters. tracker_domain is the registrable domain; full_host
// keeps the original granularity for reporting.
struct ThirdPartyRequest {
  std::string origin_page;
  std::string tracker_domain;
  std::string full_host;
  std::vector<std::pair<std::string, std::string>> parameters;
};

}  // namespace footprint

#endif  // FOOTPRINT_CORE_SESSION_HPP_
