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

#ifndef FOOTPRINT_CORE_URL_HPP_
#define FOOTPRINT_CORE_URL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace footprint {

// Absolute-URL decomposition. Scheme and host are lowercased; path and
// query are kept verbatim (still percent-encoded).
struct ParsedUrl {
  std::string scheme;
  std::string host;   // IPv6 literals are stored without brackets
  std::string port;   // empty when absent
  std::string path;   // leading '/', or empty
  std::string query;  // without the leading '?'
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

// Parses an absolute URL of the form scheme://[userinfo@]host[:port]
// [/path][?query][#fragment]. Returns nullopt when there is no scheme,
// no authority, or an empty host.
std::optional<ParsedUrl> parse_url(std::string_view url);

// Decodes %XX escapes; invalid escapes are kept verbatim. When
// plus_as_space is set, '+' decodes to ' ' (form encoding, used for
// query strings but not for path segments).
std::string percent_decode(std::string_view s, bool plus_as_space);

// Encodes everything outside the unreserved set.
std::string percent_encode(std::string_view s);

// Decoded key/value parameters of a URL, in order of appearance:
// query-string pairs split on '&' first, then semicolon-delimited
// path parameters. Keys may repeat.
ParamList url_parameters(const ParsedUrl& url);

bool is_ip_literal(std::string_view host);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_URL_HPP_
