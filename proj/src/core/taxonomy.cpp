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

#include "core/taxonomy.hpp"

#include <cctype>

#include "core/default_data.hpp"
#include "core/error.hpp"

namespace footprint {

namespace {

std::string_view trimmed(std::string_view line) {
  size_t a = 0;
  size_t b = line.size();
  while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
  return line.substr(a, b - a);
}

}  // namespace

std::string CategoryTaxonomy::normalize_term(std::string_view term) {
  std::string out;
  out.reserve(term.size());
  bool pending_space = false;
  for (char raw : term) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

CategoryTaxonomy CategoryTaxonomy::from_text(std::string_view text) {
  CategoryTaxonomy taxonomy;
  std::map<std::string, size_t> category_index;
  bool in_category = false;
  size_t current = 0;

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trimmed(text.substr(pos, nl - pos));
    bool at_end = nl == text.size();
    pos = nl + 1;

    if (line.empty() || line[0] == '#') {
      if (at_end) break;
      continue;
    }
    if (line.front() == '[' && line.back() == ']') {
      std::string name(trimmed(line.substr(1, line.size() - 2)));
      if (name.empty()) throw Error::input("taxonomy: empty category name");
      if (category_index.count(name) > 0) {
        throw Error::input("taxonomy: duplicate category \"" + name + "\"");
      }
      current = taxonomy.categories_.size();
      category_index.emplace(name, current);
      taxonomy.categories_.push_back(std::move(name));
      taxonomy.terms_by_category_.emplace_back();
      in_category = true;
    } else {
      if (!in_category) {
        throw Error::input("taxonomy: term \"" + std::string(line) +
                           "\" appears before any [category] header");
      }
      std::string term = normalize_term(line);
      auto [it, inserted] = taxonomy.lexicon_.emplace(term, current);
      if (!inserted) {
        if (it->second != current) {
          throw Error::input("taxonomy: term \"" + term +
                             "\" is assigned to two categories");
        }
      } else {
        taxonomy.terms_by_category_[current].push_back(std::move(term));
      }
    }
    if (at_end) break;
  }

  if (taxonomy.categories_.size() < 2) {
    throw Error::input("taxonomy: needs at least two categories");
  }
  return taxonomy;
}

const CategoryTaxonomy& CategoryTaxonomy::bundled_default() {
  static const CategoryTaxonomy taxonomy = from_text(data::kTaxonomy);
  return taxonomy;
}

std::optional<size_t> CategoryTaxonomy::exact_lookup(
    std::string_view term) const {
  auto it = lexicon_.find(normalize_term(term));
  if (it == lexicon_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> CategoryTaxonomy::classify(std::string_view term) const {
  std::string normalized = normalize_term(term);
  if (auto it = lexicon_.find(normalized); it != lexicon_.end()) {
    return it->second;
  }
  if (normalized.find(' ') == std::string::npos) return std::nullopt;

  std::vector<size_t> votes(categories_.size(), 0);
  size_t start = 0;
  bool any = false;
  while (start <= normalized.size()) {
    size_t space = normalized.find(' ', start);
    if (space == std::string::npos) space = normalized.size();
    std::string_view word(normalized.data() + start, space - start);
    if (auto it = lexicon_.find(word); it != lexicon_.end()) {
      ++votes[it->second];
      any = true;
    }
    if (space == normalized.size()) break;
    start = space + 1;
  }
  if (!any) return std::nullopt;

  size_t best = 0;
  for (size_t i = 1; i < votes.size(); ++i) {
    if (votes[i] > votes[best]) best = i;
  }
  return best;
}

}  // namespace footprint
