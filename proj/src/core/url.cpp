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

#include "core/url.hpp"

#include <algorithm>
#include <cctype>

namespace footprint {

namespace {

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
  return out;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool valid_scheme(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
  });
}

// Splits a "key=value" fragment on the first '=' and appends the
// decoded pair. Fragments without '=' become (key, "").
void append_pair(ParamList& out, std::string_view fragment, bool plus_as_space) {
  if (fragment.empty()) return;
  auto eq = fragment.find('=');
  std::string_view key = eq == std::string_view::npos ? fragment : fragment.substr(0, eq);
  std::string_view value = eq == std::string_view::npos ? std::string_view{} : fragment.substr(eq + 1);
  if (key.empty() && value.empty()) return;
  out.emplace_back(percent_decode(key, plus_as_space), percent_decode(value, plus_as_space));
}

}  // namespace

std::optional<ParsedUrl> parse_url(std::string_view url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos || scheme_end == 0) return std::nullopt;
  std::string_view scheme = url.substr(0, scheme_end);
  if (!valid_scheme(scheme)) return std::nullopt;

  std::string_view rest = url.substr(scheme_end + 3);
  auto authority_end = rest.find_first_of("/?#");
  std::string_view authority =
      authority_end == std::string_view::npos ? rest : rest.substr(0, authority_end);
  std::string_view tail =
      authority_end == std::string_view::npos ? std::string_view{} : rest.substr(authority_end);

  if (auto at = authority.rfind('@'); at != std::string_view::npos) {
    authority = authority.substr(at + 1);
  }
  if (authority.empty()) return std::nullopt;

  ParsedUrl out;
  out.scheme = to_lower(scheme);

  if (authority.front() == '[') {
    auto close = authority.find(']');
    if (close == std::string_view::npos) return std::nullopt;
    out.host = to_lower(authority.substr(1, close - 1));
    std::string_view after = authority.substr(close + 1);
    if (!after.empty()) {
      if (after.front() != ':') return std::nullopt;
      out.port = std::string(after.substr(1));
    }
  } else {
    auto colon = authority.rfind(':');
    if (colon != std::string_view::npos &&
        std::all_of(authority.begin() + colon + 1, authority.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      out.port = std::string(authority.substr(colon + 1));
      authority = authority.substr(0, colon);
    }
    out.host = to_lower(authority);
  }
  if (out.host.empty()) return std::nullopt;

  if (!tail.empty() && tail.front() == '/') {
    auto path_end = tail.find_first_of("?#");
    out.path = std::string(path_end == std::string_view::npos ? tail : tail.substr(0, path_end));
    tail = path_end == std::string_view::npos ? std::string_view{} : tail.substr(path_end);
  }
  if (!tail.empty() && tail.front() == '?') {
    auto frag = tail.find('#');
    out.query = std::string(frag == std::string_view::npos ? tail.substr(1) : tail.substr(1, frag - 1));
  }
  return out;
}

std::string percent_decode(std::string_view s, bool plus_as_space) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '%' && i + 2 < s.size()) {
      int hi = hex_value(s[i + 1]);
      int lo = hex_value(s[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
        continue;
      }
    }
    if (plus_as_space && c == '+') {
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string percent_encode(std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    bool unreserved = std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~';
    if (unreserved) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xF]);
    }
  }
  return out;
}

ParamList url_parameters(const ParsedUrl& url) {
  ParamList out;
  std::string_view query = url.query;
  while (!query.empty()) {
    auto amp = query.find('&');
    append_pair(out, query.substr(0, amp), /*plus_as_space=*/true);
    if (amp == std::string_view::npos) break;
    query.remove_prefix(amp + 1);
  }
  // Semicolon-delimited path parameters: /name;key=value/next;k2=v2
  std::string_view path = url.path;
  while (!path.empty()) {
    auto slash = path.find('/');
    std::string_view segment = slash == std::string_view::npos ? path : path.substr(0, slash);
    auto semi = segment.find(';');
    while (semi != std::string_view::npos) {
      segment.remove_prefix(semi + 1);
      auto next = segment.find(';');
      append_pair(out, next == std::string_view::npos ? segment : segment.substr(0, next),
                  /*plus_as_space=*/false);
      semi = next;
    }
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return out;
}

bool is_ip_literal(std::string_view host) {
  if (host.find(':') != std::string_view::npos) return true;  // IPv6
  int parts = 0;
  std::size_t start = 0;
  while (start <= host.size()) {
    auto dot = host.find('.', start);
    std::string_view label =
        dot == std::string_view::npos ? host.substr(start) : host.substr(start, dot - start);
    if (label.empty() || label.size() > 3) return false;
    int value = 0;
    for (char c : label) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      value = value * 10 + (c - '0');
    }
    if (value > 255) return false;
    ++parts;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts == 4;
}

}  // namespace footprint
