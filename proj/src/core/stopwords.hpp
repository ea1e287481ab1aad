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

#ifndef FOOTPRINT_CORE_STOPWORDS_HPP_
#define FOOTPRINT_CORE_STOPWORDS_HPP_

#include <set>
#include <string>
#include <string_view>

namespace footprint {

class StopwordList {
 public:
  StopwordList() = default;

  // One word per line; blank lines skipped; words lowercased.
  static StopwordList from_text(std::string_view text);

  // The bundled English list, parsed once.
  static const StopwordList& bundled_english();

  // Case-insensitive membership (ASCII folding).
  bool contains(std::string_view word) const;

  size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

 private:
  std::set<std::string, std::less<>> words_;
};

}  // namespace footprint

#endif  // FOOTPRINT_CORE_STOPWORDS_HPP_
