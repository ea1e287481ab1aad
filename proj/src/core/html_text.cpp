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

#include "core/html_text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <utility>

namespace footprint {

namespace {

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool iequal(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (lower(a[i]) != lower(b[i])) return false;
  }
  return true;
}

void append_utf8(uint32_t cp, std::string& out) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Attributes of one tag, names lowercased, values entity-decoded.
std::vector<std::pair<std::string, std::string>> parse_attributes(
    std::string_view body) {
  std::vector<std::pair<std::string, std::string>> attrs;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() &&
           std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
    }
  };
  // Skip the tag name.
  while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) {
    ++i;
  }
  while (i < body.size()) {
    skip_ws();
    if (i >= body.size() || body[i] == '/') break;
    size_t name_start = i;
    while (i < body.size() && body[i] != '=' && body[i] != '/' &&
           !std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
    }
    std::string name = ascii_lower(body.substr(name_start, i - name_start));
    if (name.empty()) {
      ++i;
      continue;
    }
    skip_ws();
    std::string value;
    if (i < body.size() && body[i] == '=') {
      ++i;
      skip_ws();
      if (i < body.size() && (body[i] == '"' || body[i] == '\'')) {
        char quote = body[i++];
        size_t end = body.find(quote, i);
        if (end == std::string_view::npos) end = body.size();
        value = std::string(body.substr(i, end - i));
        i = std::min(end + 1, body.size());
      } else {
        size_t start = i;
        while (i < body.size() &&
               !std::isspace(static_cast<unsigned char>(body[i]))) {
          ++i;
        }
        value = std::string(body.substr(start, i - start));
      }
    }
    attrs.emplace_back(std::move(name), decode_html_entities(value));
  }
  return attrs;
}

std::string attribute_value(
    const std::vector<std::pair<std::string, std::string>>& attrs,
    std::string_view name) {
  for (const auto& [key, value] : attrs) {
    if (key == name) return value;
  }
  return std::string();
}

// Locates the end of a tag that starts at `pos` (pointing at '<'),
// honouring quoted attribute values. Returns the index past '>'.
size_t tag_end(std::string_view html, size_t pos) {
  char quote = 0;
  for (size_t i = pos + 1; i < html.size(); ++i) {
    char c = html[i];
    if (quote != 0) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '>') {
      return i + 1;
    }
  }
  return html.size();
}

// Finds the closing tag "</name" at or after `pos`, case-insensitive.
size_t find_closing_tag(std::string_view html, size_t pos,
                        std::string_view name) {
  while (pos < html.size()) {
    size_t open = html.find('<', pos);
    if (open == std::string_view::npos || open + 1 >= html.size()) {
      return html.size();
    }
    if (html[open + 1] == '/' &&
        open + 2 + name.size() <= html.size() &&
        iequal(html.substr(open + 2, name.size()), name)) {
      size_t after = open + 2 + name.size();
      if (after >= html.size() || html[after] == '>' ||
          std::isspace(static_cast<unsigned char>(html[after]))) {
        size_t end = html.find('>', after);
        return end == std::string_view::npos ? html.size() : end + 1;
      }
    }
    pos = open + 1;
  }
  return html.size();
}

void split_keywords(std::string_view content, std::vector<std::string>& out) {
  size_t start = 0;
  while (start <= content.size()) {
    size_t comma = content.find(',', start);
    if (comma == std::string_view::npos) comma = content.size();
    std::string_view item = content.substr(start, comma - start);
    size_t a = 0;
    size_t b = item.size();
    while (a < b && std::isspace(static_cast<unsigned char>(item[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(item[b - 1]))) --b;
    if (b > a) out.emplace_back(item.substr(a, b - a));
    if (comma == content.size()) break;
    start = comma + 1;
  }
}

}  // namespace

std::string decode_html_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back(text[i++]);
      continue;
    }
    std::string_view name = text.substr(i + 1, semi - i - 1);
    bool handled = true;
    if (name == "amp") {
      out.push_back('&');
    } else if (name == "lt") {
      out.push_back('<');
    } else if (name == "gt") {
      out.push_back('>');
    } else if (name == "quot") {
      out.push_back('"');
    } else if (name == "apos") {
      out.push_back('\'');
    } else if (name == "nbsp") {
      // Plain space keeps downstream tokenization simple.
      out.push_back(' ');
    } else if (!name.empty() && name[0] == '#') {
      uint32_t cp = 0;
      bool ok = name.size() > 1;
      if (name.size() > 2 && (name[1] == 'x' || name[1] == 'X')) {
        for (size_t k = 2; k < name.size() && ok; ++k) {
          char c = lower(name[k]);
          if (c >= '0' && c <= '9') {
            cp = cp * 16 + static_cast<uint32_t>(c - '0');
          } else if (c >= 'a' && c <= 'f') {
            cp = cp * 16 + static_cast<uint32_t>(c - 'a' + 10);
          } else {
            ok = false;
          }
          if (cp > 0x10FFFF) cp = 0x110000;
        }
        ok = ok && name.size() > 2;
      } else {
        for (size_t k = 1; k < name.size() && ok; ++k) {
          char c = name[k];
          if (c >= '0' && c <= '9') {
            cp = cp * 10 + static_cast<uint32_t>(c - '0');
          } else {
            ok = false;
          }
          if (cp > 0x10FFFF) cp = 0x110000;
        }
      }
      if (ok) {
        append_utf8(cp, out);
      } else {
        handled = false;
      }
    } else {
      handled = false;
    }
    if (handled) {
      i = semi + 1;
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

PageContent extract_page_content(std::string_view html) {
  PageContent content;
  std::string raw;
  raw.reserve(html.size() / 2);
  size_t i = 0;
  while (i < html.size()) {
    size_t open = html.find('<', i);
    if (open == std::string_view::npos) {
      raw.append(html.substr(i));
      break;
    }
    raw.append(html.substr(i, open - i));
    raw.push_back(' ');
    if (html.compare(open, 4, "<!--") == 0) {
      size_t end = html.find("-->", open + 4);
      i = end == std::string_view::npos ? html.size() : end + 3;
      continue;
    }
    if (open + 1 < html.size() &&
        (html[open + 1] == '!' || html[open + 1] == '?')) {
      i = tag_end(html, open);
      continue;
    }
    size_t end = tag_end(html, open);
    std::string_view body = html.substr(open + 1, end - open - 2);
    bool closing = !body.empty() && body[0] == '/';
    bool self_closing = !body.empty() && body.back() == '/';
    std::string_view name_view = closing ? body.substr(1) : body;
    size_t name_len = 0;
    while (name_len < name_view.size() &&
           !std::isspace(static_cast<unsigned char>(name_view[name_len])) &&
           name_view[name_len] != '/') {
      ++name_len;
    }
    std::string name = ascii_lower(name_view.substr(0, name_len));
    i = end;
    if (closing) continue;
    if (!self_closing &&
        (name == "script" || name == "style" || name == "noscript")) {
      i = find_closing_tag(html, end, name);
      continue;
    }
    if (name == "meta") {
      auto attrs = parse_attributes(body);
      if (iequal(attribute_value(attrs, "name"), "keywords")) {
        split_keywords(attribute_value(attrs, "content"),
                       content.meta_keywords);
      }
    }
  }

  std::string decoded = decode_html_entities(raw);
  std::string& text = content.text;
  text.reserve(decoded.size());
  bool pending_space = false;
  for (char c : decoded) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !text.empty();
      continue;
    }
    if (pending_space) {
      text.push_back(' ');
      pending_space = false;
    }
    text.push_back(c);
  }
  return content;
}

}  // namespace footprint
