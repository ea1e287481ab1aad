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

#ifndef FOOTPRINT_CORE_RAKE_HPP_
#define FOOTPRINT_CORE_RAKE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "core/session.hpp"
#include "core/stopwords.hpp"

namespace footprint {

struct ScoredKeyword {
  std::string phrase;
  double score = 0.0;
};

// RAKE keyword extraction.
//
// The text is lowercased and split on whitespace; the delimiters
// `. , ; : ! ? ( ) [ ] " '` and line breaks end a phrase, as do
// stopwords and digits-only tokens. Each maximal remaining word run
// is a candidate, truncated to its first max_phrase_len words. With
// freq(w) = occurrences of w across candidates and deg(w) = sum of
// the lengths of the candidates containing w (with multiplicity), a
// word scores deg(w)/freq(w) and a phrase scores the sum over its
// words. Scores accumulate as exact integer fractions and divide
// once at the end. Duplicate phrases collapse to one entry; output
// is sorted by descending score, ties by first occurrence.
std::vector<ScoredKeyword> rake_extract(std::string_view text,
                                        const StopwordList& stopwords,
                                        int max_phrase_len = 3);

// Keeps the top ceil(size * fraction) entries of an already-sorted
// keyword list. fraction outside (0, 1] keeps everything.
std::vector<ScoredKeyword> take_top_fraction(std::vector<ScoredKeyword> keywords,
                                             double fraction);

// Page meta keywords, lowercased and trimmed, empties dropped; order
// and duplicates preserved.
std::vector<std::string> collect_meta_keywords(const PageVisit& visit);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_RAKE_HPP_
