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

#include "core/suffix.hpp"

#include <algorithm>
#include <vector>

#include "core/default_data.hpp"
#include "core/error.hpp"
#include "core/url.hpp"

namespace footprint {

namespace {

std::string lower_trimmed(std::string_view line) {
  auto begin = line.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  auto end = line.find_last_not_of(" \t\r");
  std::string out(line.substr(begin, end - begin + 1));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
  });
  return out;
}

std::vector<std::string_view> split_labels(std::string_view host) {
  std::vector<std::string_view> labels;
  std::size_t start = 0;
  while (start <= host.size()) {
    auto dot = host.find('.', start);
    if (dot == std::string_view::npos) {
      labels.push_back(host.substr(start));
      break;
    }
    labels.push_back(host.substr(start, dot - start));
    start = dot + 1;
  }
  return labels;
}

}  // namespace

PublicSuffixTable PublicSuffixTable::from_text(std::string_view text) {
  PublicSuffixTable table;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
    std::string rule = lower_trimmed(line);
    if (!rule.empty() && rule.rfind("//", 0) != 0) {
      if (rule[0] == '!') {
        table.exceptions_.insert(rule.substr(1));
      } else if (rule.rfind("*.", 0) == 0) {
        table.wildcards_.insert(rule.substr(2));
      } else if (rule != "*") {
        table.rules_.insert(rule);
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return table;
}

const PublicSuffixTable& PublicSuffixTable::bundled() {
  static const PublicSuffixTable table = from_text(data::kPublicSuffixList);
  return table;
}

std::string PublicSuffixTable::registrable_domain(std::string_view host) const {
  std::string h = lower_trimmed(host);
  while (!h.empty() && h.back() == '.') h.pop_back();
  if (h.empty()) throw Error::input("registrable_domain: empty host");
  if (is_ip_literal(h)) return h;

  auto labels = split_labels(h);
  const std::size_t n = labels.size();
  if (n == 1) return h;

  // Candidate suffixes from shortest (the last label) to longest; track
  // the longest plain/wildcard match and any exception match.
  std::size_t suffix_labels = 1;  // implicit "*" default rule
  std::size_t exception_labels = 0;
  std::string candidate;
  for (std::size_t take = 1; take <= n; ++take) {
    candidate.clear();
    for (std::size_t i = n - take; i < n; ++i) {
      if (!candidate.empty()) candidate.push_back('.');
      candidate += labels[i];
    }
    if (exceptions_.count(candidate)) exception_labels = take;
    if (rules_.count(candidate)) suffix_labels = std::max(suffix_labels, take);
    if (take >= 2 && wildcards_.count(candidate.substr(labels[n - take].size() + 1))) {
      suffix_labels = std::max(suffix_labels, take);
    }
  }
  if (exception_labels > 0) {
    // An exception rule makes the matched name itself registrable.
    suffix_labels = exception_labels - 1;
  }

  std::size_t keep = std::min(n, suffix_labels + 1);
  std::string out;
  for (std::size_t i = n - keep; i < n; ++i) {
    if (!out.empty()) out.push_back('.');
    out += labels[i];
  }
  return out;
}

}  // namespace footprint
