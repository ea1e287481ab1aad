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

#ifndef FOOTPRINT_CORE_SUFFIX_HPP_
#define FOOTPRINT_CORE_SUFFIX_HPP_

#include <set>
#include <string>
#include <string_view>

namespace footprint {

// Public-suffix rules for deriving the registrable domain (eTLD+1) of a
// hostname. Rule semantics follow the publicsuffix.org conventions:
// plain suffix rules, "*." wildcards, "!" exceptions; the prevailing
// match is an exception if one matches, otherwise the rule with the
// most labels. Unknown suffixes fall back to the implicit "*" rule,
// which yields the last two labels.
class PublicSuffixTable {
 public:
  // Parses a plain-text table, one suffix per line, "//" comments ignored.
  static PublicSuffixTable from_text(std::string_view text);

  // Table built from the bundled abridged suffix list.
  static const PublicSuffixTable& bundled();

  // Registrable domain of a hostname. IP literals are returned
  // unchanged, as are hosts that consist of a single label or are
  // themselves a public suffix. Throws Error (input) on an empty host.
  std::string registrable_domain(std::string_view host) const;

  std::size_t rule_count() const {
    return rules_.size() + wildcards_.size() + exceptions_.size();
  }

 private:
  std::set<std::string, std::less<>> rules_;
  std::set<std::string, std::less<>> wildcards_;   // "ck" stands for "*.ck"
  std::set<std::string, std::less<>> exceptions_;  // "www.ck" stands for "!www.ck"
};

}  // namespace footprint

#endif  // FOOTPRINT_CORE_SUFFIX_HPP_
