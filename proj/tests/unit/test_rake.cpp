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

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/session.hpp"
#include "core/stopwords.hpp"
#include "doctest.h"
#include "test_support.hpp"

using footprint::Error;
using footprint::ScoredKeyword;
using footprint::StopwordList;
using footprint::collect_meta_keywords;
using footprint::rake_extract;
using footprint::take_top_fraction;
using footprint::testing::TestRng;

namespace {
const StopwordList kNoStopwords = StopwordList::from_text("");
}  // namespace

TEST_CASE("worked example: good apples, good red wine") {
  // With no stopwords the comma splits two candidates.
  //   freq: good 2, apples 1, red 1, wine 1
  //   deg:  good 5 (2 + 3), apples 2, red 3, wine 3
  //   word scores: good 5/2, apples 2, red 3, wine 3
  //   "good red wine" = 5/2 + 3 + 3 = 17/2, "good apples" = 5/2 + 2 = 9/2
  auto out = rake_extract("good apples, good red wine", kNoStopwords);
  REQUIRE(out.size() == 2);
  CHECK(out[0].phrase == "good red wine");
  CHECK(out[0].score == 8.5);
  CHECK(out[1].phrase == "good apples");
  CHECK(out[1].score == 4.5);
}

TEST_CASE("duplicate candidates merge into one entry") {
  auto out = rake_extract("cheap cars. cheap cars.", kNoStopwords);
  REQUIRE(out.size() == 1);
  CHECK(out[0].phrase == "cheap cars");
  // freq 2 / deg 4 for both words: score 2 + 2.
  CHECK(out[0].score == 4.0);
}

TEST_CASE("bundled stopwords split candidate runs") {
  auto out = rake_extract("the fine red wine of spain", StopwordList::bundled_english());
  REQUIRE(out.size() == 2);
  CHECK(out[0].phrase == "fine red wine");
  CHECK(out[0].score == 9.0);
  CHECK(out[1].phrase == "spain");
  CHECK(out[1].score == 1.0);
}

TEST_CASE("digit-only tokens break runs without joining phrases") {
  auto out = rake_extract("blue 42 shoes", kNoStopwords);
  REQUIRE(out.size() == 2);
  CHECK(out[0].phrase == "blue");
  CHECK(out[1].phrase == "shoes");
}

TEST_CASE("long runs are cut at the phrase length limit") {
  auto out = rake_extract("alpha beta gamma delta epsilon", kNoStopwords, 3);
  REQUIRE(out.size() == 1);
  CHECK(out[0].phrase == "alpha beta gamma");
}

TEST_CASE("ties keep first-occurrence order") {
  auto out = rake_extract("alpha beta. gamma delta.", kNoStopwords);
  REQUIRE(out.size() == 2);
  CHECK(out[0].score == out[1].score);
  CHECK(out[0].phrase == "alpha beta");
  CHECK(out[1].phrase == "gamma delta");
}

TEST_CASE("output is case-folded and sorted by score") {
  auto out = rake_extract("Red Wine! red wine? Cigars.", kNoStopwords);
  REQUIRE(out.size() == 2);
  CHECK(out[0].phrase == "red wine");
  CHECK(out[0].score > out[1].score);
  CHECK(out[1].phrase == "cigars");
}

TEST_CASE("degenerate inputs yield no keywords") {
  CHECK(rake_extract("", kNoStopwords).empty());
  CHECK(rake_extract("... !!! ???", kNoStopwords).empty());
  CHECK(rake_extract("the of and", StopwordList::bundled_english()).empty());
  CHECK(rake_extract("1999 2024", kNoStopwords).empty());
}

TEST_CASE("a phrase length below one is rejected") {
  CHECK_THROWS_AS((void)rake_extract("x", kNoStopwords, 0), Error);
}

TEST_CASE("scores match an independent rational recomputation") {
  const std::vector<std::string> vocab = {"amber", "birch", "cedar", "dune",
                                          "ember", "fjord", "42"};
  const std::vector<std::string> seps = {" ", ", ", ". ", "! ", "\n"};
  TestRng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    const size_t tokens = 1 + rng.below(30);
    for (size_t i = 0; i < tokens; ++i) {
      text += vocab[rng.below(vocab.size())];
      text += seps[rng.below(seps.size())];
    }
    const int max_len = 1 + static_cast<int>(rng.below(4));
    auto out = rake_extract(text, kNoStopwords, max_len);

    // Re-derive candidates with a simple split-based pass.
    std::string flat = text;
    for (char& ch : flat) {
      if (std::string(".,;:!?()[]\"'\n\r").find(ch) != std::string::npos) ch = '|';
    }
    std::vector<std::vector<std::string>> candidates;
    std::stringstream chunks(flat);
    std::string chunk;
    while (std::getline(chunks, chunk, '|')) {
      std::vector<std::string> words;
      std::stringstream ws(chunk);
      std::string w;
      while (ws >> w) {
        const bool digits = w.find_first_not_of("0123456789") == std::string::npos;
        if (digits) {
          if (!words.empty()) candidates.push_back(words);
          words.clear();
        } else {
          words.push_back(w);
        }
      }
      if (!words.empty()) candidates.push_back(words);
    }
    std::map<std::string, long long> freq;
    std::map<std::string, long long> deg;
    for (auto& words : candidates) {
      if (words.size() > static_cast<size_t>(max_len)) words.resize(max_len);
      for (const std::string& w : words) {
        freq[w] += 1;
        deg[w] += static_cast<long long>(words.size());
      }
    }
    std::map<std::string, long double> expected;
    for (const auto& words : candidates) {
      std::string phrase;
      long double score = 0.0L;
      std::vector<std::string> cut = words;
      for (const std::string& w : cut) {
        if (!phrase.empty()) phrase += ' ';
        phrase += w;
        score += static_cast<long double>(deg[w]) / static_cast<long double>(freq[w]);
      }
      expected.emplace(phrase, score);
    }
    REQUIRE(out.size() == expected.size());
    for (const ScoredKeyword& kw : out) {
      REQUIRE(expected.count(kw.phrase) == 1);
      CHECK(kw.score == doctest::Approx(static_cast<double>(expected[kw.phrase])).epsilon(1e-12));
    }
    for (size_t i = 1; i < out.size(); ++i) CHECK(out[i - 1].score >= out[i].score);
  }
}

TEST_CASE("take_top_fraction keeps the ceiling of the share") {
  std::vector<ScoredKeyword> nine(9);
  for (size_t i = 0; i < nine.size(); ++i) nine[i] = {std::to_string(i), 9.0 - double(i)};
  CHECK(take_top_fraction(nine, 1.0 / 3.0).size() == 3);
  std::vector<ScoredKeyword> ten(10);
  for (size_t i = 0; i < ten.size(); ++i) ten[i] = {std::to_string(i), 10.0 - double(i)};
  auto top = take_top_fraction(ten, 1.0 / 3.0);
  REQUIRE(top.size() == 4);
  CHECK(top[0].phrase == "0");
  CHECK(top[3].phrase == "3");
  CHECK(take_top_fraction(ten, 1.0).size() == 10);
  CHECK(take_top_fraction({}, 0.5).empty());
}

TEST_CASE("take_top_fraction treats out-of-range fractions as keep-all") {
  std::vector<ScoredKeyword> three = {{"a", 3}, {"b", 2}, {"c", 1}};
  CHECK(take_top_fraction(three, 0.0).size() == 3);
  CHECK(take_top_fraction(three, -1.0).size() == 3);
  CHECK(take_top_fraction(three, 1.5).size() == 3);
}

TEST_CASE("collect_meta_keywords normalises and drops empties") {
  footprint::PageVisit visit;
  visit.meta_keywords = {"Sports", " Red Wine ", "", "  "};
  auto out = collect_meta_keywords(visit);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == "sports");
  CHECK(out[1] == "red wine");
  CHECK(collect_meta_keywords(footprint::PageVisit{}).empty());
}

TEST_CASE("stopword lists are case-insensitive and trimmed") {
  auto list = StopwordList::from_text("The\n  of \n\n# not a comment marker, still a word\n");
  CHECK(list.contains("the"));
  CHECK(list.contains("THE"));
  CHECK(list.contains("of"));
  CHECK_FALSE(list.contains("wine"));
  CHECK(StopwordList::bundled_english().contains("the"));
  CHECK(StopwordList::bundled_english().size() > 100);
}
