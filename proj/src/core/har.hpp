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

#ifndef FOOTPRINT_CORE_HAR_HPP_
#define FOOTPRINT_CORE_HAR_HPP_

#include <string_view>

#include "core/session.hpp"

namespace footprint {

struct ParseDiagnostics {
  // Entries dropped because their pageref is absent or names no page,
  // or because their request URL is not an absolute URL.
  size_t skipped_entries = 0;
};

// Parses a HAR 1.2 document into a session. Pages become visits in
// start-time order; entries attach to their pageref. The page URL is
// the first document-kind entry's URL (first entry, then a URL-shaped
// title, as fallbacks), and page text comes from that entry's embedded
// response body when present. user_id labels the resulting session.
//
// Throws Error{kInput} on malformed JSON (message carries the byte
// offset), on a HAR with zero pages ("empty session"), or on a page
// with no usable URL.
BrowsingSession parse_har(std::string_view bytes, std::string_view user_id,
                          ParseDiagnostics* diagnostics = nullptr);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_HAR_HPP_
