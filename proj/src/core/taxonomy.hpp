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

#ifndef FOOTPRINT_CORE_TAXONOMY_HPP_
#define FOOTPRINT_CORE_TAXONOMY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace footprint {

// A fixed, ordered set of interest categories plus a term lexicon.
//
// File format: UTF-8 text; lines whose first non-blank character is
// `#` are comments; `[name]` opens a category; every other non-empty
// line is a term of the current category. Terms are normalized to
// lowercase single-spaced form.
class CategoryTaxonomy {
 public:
  // Throws Error{kInput} on duplicate categories, a term before any
  // category header, a term assigned to two categories, or fewer
  // than two categories overall.
  static CategoryTaxonomy from_text(std::string_view text);

  // The bundled default taxonomy, parsed once.
  static const CategoryTaxonomy& bundled_default();

  static std::string normalize_term(std::string_view term);

  size_t category_count() const { return categories_.size(); }
  const std::string& category_name(size_t index) const {
    return categories_[index];
  }
  const std::vector<std::string>& categories() const { return categories_; }

  // Exact normalized lookup; no fallback.
  std::optional<size_t> exact_lookup(std::string_view term) const;

  // Exact lookup first; failing that, a multi-word term falls back to
  // a plurality vote over its constituent words (ties pick the lowest
  // category index).
  std::optional<size_t> classify(std::string_view term) const;

  // Lexicon terms of one category, in file order.
  const std::vector<std::string>& terms_for(size_t index) const {
    return terms_by_category_[index];
  }

  size_t lexicon_size() const { return lexicon_.size(); }

 private:
  std::vector<std::string> categories_;
  std::vector<std::vector<std::string>> terms_by_category_;
  std::map<std::string, size_t, std::less<>> lexicon_;
};

}  // namespace footprint

#endif  // FOOTPRINT_CORE_TAXONOMY_HPP_
