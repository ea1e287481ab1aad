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

#include "core/stopwords.hpp"

#include <algorithm>
#include <cctype>

#include "core/default_data.hpp"

namespace footprint {

namespace {

std::string lower_trimmed(std::string_view line) {
  size_t a = 0;
  size_t b = line.size();
  while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
  std::string out(line.substr(a, b - a));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

StopwordList StopwordList::from_text(std::string_view text) {
  StopwordList list;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string word = lower_trimmed(text.substr(pos, nl - pos));
    if (!word.empty()) list.words_.insert(std::move(word));
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  return list;
}

const StopwordList& StopwordList::bundled_english() {
  static const StopwordList list = from_text(data::kStopwords);
  return list;
}

bool StopwordList::contains(std::string_view word) const {
  std::string folded = lower_trimmed(word);
  return words_.find(folded) != words_.end();
}

}  // namespace footprint
