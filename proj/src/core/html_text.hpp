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

#ifndef FOOTPRINT_CORE_HTML_TEXT_HPP_
#define FOOTPRINT_CORE_HTML_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace footprint {

struct PageContent {
  std::string text;
  std::vector<std::string> meta_keywords;
};

// Strips markup from an HTML document and collects the keywords meta
// tag. Script, style and noscript bodies and comments are dropped;
// remaining text has entities decoded and whitespace collapsed.
PageContent extract_page_content(std::string_view html);

// Decodes the handful of named entities that matter for prose plus
// numeric character references (&#65; and &#x41;), UTF-8 encoded.
std::string decode_html_entities(std::string_view text);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_HTML_TEXT_HPP_
