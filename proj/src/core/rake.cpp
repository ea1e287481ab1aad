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

#include "core/rake.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

#include "core/error.hpp"

namespace footprint {

namespace {

bool is_delimiter(char c) {
  switch (c) {
    case '.':
    case ',':
    case ';':
    case ':':
    case '!':
    case '?':
    case '(':
    case ')':
    case '[':
    case ']':
    case '"':
    case '\'':
    case '\n':
    case '\r':
      return true;
    default:
      return false;
  }
}

bool digits_only(const std::string& word) {
  return !word.empty() &&
         std::all_of(word.begin(), word.end(), [](unsigned char c) {
           return std::isdigit(c) != 0;
         });
}

// Exact sum of integer fractions; reduced at every step so realistic
// inputs stay well inside int64 range.
struct Fraction {
  int64_t num = 0;
  int64_t den = 1;

  void add(int64_t n, int64_t d) {
    int64_t g = std::gcd(den, d);
    int64_t scale = d / g;
    num = num * scale + n * (den / g);
    den = den * scale;
    g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace

std::vector<ScoredKeyword> rake_extract(std::string_view text,
                                        const StopwordList& stopwords,
                                        int max_phrase_len) {
  if (max_phrase_len < 1) {
    throw Error::input("max_phrase_len must be positive");
  }

  // Candidate phrases, each a run of kept words.
  std::vector<std::vector<std::string>> candidates;
  std::vector<std::string> run;
  std::string word;

  auto end_word = [&](bool break_phrase) {
    if (!word.empty()) {
      if (stopwords.contains(word) || digits_only(word)) {
        break_phrase = true;
      } else {
        run.push_back(std::move(word));
      }
      word.clear();
    }
    if (break_phrase && !run.empty()) {
      if (static_cast<int>(run.size()) > max_phrase_len) {
        run.resize(static_cast<size_t>(max_phrase_len));
      }
      candidates.push_back(std::move(run));
      run.clear();
    }
  };

  for (char raw : text) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (is_delimiter(raw)) {
      end_word(true);
    } else if (std::isspace(c)) {
      end_word(false);
    } else {
      word.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  end_word(true);

  std::map<std::string, int64_t> freq;
  std::map<std::string, int64_t> deg;
  for (const auto& candidate : candidates) {
    auto length = static_cast<int64_t>(candidate.size());
    for (const std::string& w : candidate) {
      freq[w] += 1;
      deg[w] += length;
    }
  }

  std::vector<ScoredKeyword> out;
  std::map<std::string, size_t> seen;
  for (const auto& candidate : candidates) {
    std::string phrase;
    for (const std::string& w : candidate) {
      if (!phrase.empty()) phrase.push_back(' ');
      phrase += w;
    }
    if (seen.count(phrase) > 0) continue;
    Fraction score;
    for (const std::string& w : candidate) {
      score.add(deg[w], freq[w]);
    }
    seen.emplace(phrase, out.size());
    out.push_back({std::move(phrase), score.value()});
  }

  std::vector<size_t> order(out.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return out[a].score > out[b].score;
  });
  std::vector<ScoredKeyword> sorted;
  sorted.reserve(out.size());
  for (size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<ScoredKeyword> take_top_fraction(std::vector<ScoredKeyword> keywords,
                                             double fraction) {
  if (fraction <= 0.0 || fraction > 1.0 || keywords.empty()) return keywords;
  auto keep = static_cast<size_t>(
      std::ceil(static_cast<double>(keywords.size()) * fraction));
  if (keep < 1) keep = 1;
  if (keep < keywords.size()) keywords.resize(keep);
  return keywords;
}

std::vector<std::string> collect_meta_keywords(const PageVisit& visit) {
  std::vector<std::string> out;
  out.reserve(visit.meta_keywords.size());
  for (const std::string& raw : visit.meta_keywords) {
    size_t a = 0;
    size_t b = raw.size();
    while (a < b && std::isspace(static_cast<unsigned char>(raw[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(raw[b - 1]))) --b;
    if (a == b) continue;
    std::string word = raw.substr(a, b - a);
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    out.push_back(std::move(word));
  }
  return out;
}

}  // namespace footprint
