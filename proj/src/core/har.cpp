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

#include "core/har.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <json.hpp>

#include "core/error.hpp"
#include "core/html_text.hpp"
#include "core/url.hpp"

namespace footprint {

namespace {

using nlohmann::json;

std::string base64_decode(std::string_view in) {
  auto value_of = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
  };
  std::string out;
  out.reserve(in.size() / 4 * 3);
  int buffer = 0;
  int bits = 0;
  for (char c : in) {
    if (c == '=' || c == '\n' || c == '\r') continue;
    int v = value_of(c);
    if (v < 0) continue;
    buffer = (buffer << 6) | v;
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<char>((buffer >> bits) & 0xFF));
    }
  }
  return out;
}

std::string string_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return std::string();
  return it->get<std::string>();
}

struct PendingPage {
  std::string id;
  std::string started;
  std::string title;
  size_t order = 0;
  std::vector<HttpRequestRecord> requests;
  std::string document_body;
  bool has_document = false;
};

// Embedded response body of an entry, decoded if base64.
std::string entry_body(const json& response) {
  auto content = response.find("content");
  if (content == response.end() || !content->is_object()) return std::string();
  std::string text = string_field(*content, "text");
  if (text.empty()) return std::string();
  if (string_field(*content, "encoding") == "base64") {
    return base64_decode(text);
  }
  return text;
}

}  // namespace

BrowsingSession parse_har(std::string_view bytes, std::string_view user_id,
                          ParseDiagnostics* diagnostics) {
  if (user_id.empty()) throw Error::input("HAR session needs a user id");

  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error::input(std::string("malformed HAR: ") + e.what());
  }

  const json* log = nullptr;
  if (doc.is_object()) {
    auto it = doc.find("log");
    if (it != doc.end() && it->is_object()) log = &*it;
  }
  if (log == nullptr) throw Error::input("malformed HAR: missing log object");

  std::vector<PendingPage> pages;
  std::map<std::string, size_t> page_by_id;
  if (auto it = log->find("pages"); it != log->end() && it->is_array()) {
    for (const json& page : *it) {
      if (!page.is_object()) continue;
      PendingPage pending;
      pending.id = string_field(page, "id");
      pending.started = string_field(page, "startedDateTime");
      pending.title = string_field(page, "title");
      pending.order = pages.size();
      if (pending.id.empty()) continue;
      page_by_id.emplace(pending.id, pages.size());
      pages.push_back(std::move(pending));
    }
  }
  if (pages.empty()) throw Error::input("empty session: HAR has no pages");

  // ISO 8601 timestamps order lexicographically; ties keep file order.
  std::vector<size_t> order(pages.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return pages[a].started < pages[b].started;
  });

  if (auto it = log->find("entries"); it != log->end() && it->is_array()) {
    for (const json& entry : *it) {
      if (!entry.is_object()) continue;
      std::string pageref = string_field(entry, "pageref");
      auto slot = page_by_id.find(pageref);
      if (slot == page_by_id.end()) {
        if (diagnostics != nullptr) ++diagnostics->skipped_entries;
        continue;
      }
      PendingPage& page = pages[slot->second];

      HttpRequestRecord record;
      if (auto req = entry.find("request");
          req != entry.end() && req->is_object()) {
        record.url = string_field(*req, "url");
      }
      // Session logs only accept absolute URLs, so a record that fails
      // to parse here could never round-trip through save/load.
      if (!parse_url(record.url)) {
        if (diagnostics != nullptr) ++diagnostics->skipped_entries;
        continue;
      }
      std::string mime;
      std::string body;
      if (auto resp = entry.find("response");
          resp != entry.end() && resp->is_object()) {
        if (auto content = resp->find("content");
            content != resp->end() && content->is_object()) {
          mime = string_field(*content, "mimeType");
        }
        body = entry_body(*resp);
      }
      if (!mime.empty()) record.response_mime = mime;
      record.kind = infer_resource_kind(record.url, record.response_mime);
      if (record.kind == ResourceKind::kDocument && !page.has_document) {
        page.has_document = true;
        page.document_body = std::move(body);
      }
      page.requests.push_back(std::move(record));
    }
  }

  BrowsingSession session;
  session.user_id = std::string(user_id);
  session.visits.reserve(pages.size());
  for (size_t slot : order) {
    PendingPage& page = pages[slot];
    PageVisit visit;
    visit.visit_index = static_cast<int>(session.visits.size());

    for (const HttpRequestRecord& record : page.requests) {
      if (record.kind == ResourceKind::kDocument) {
        visit.page_url = record.url;
        break;
      }
    }
    if (visit.page_url.empty() && !page.requests.empty()) {
      visit.page_url = page.requests.front().url;
    }
    if (visit.page_url.empty() && parse_url(page.title)) {
      visit.page_url = page.title;
    }
    if (visit.page_url.empty()) {
      throw Error::input("HAR page '" + page.id + "' has no usable URL");
    }

    if (!page.document_body.empty()) {
      PageContent content = extract_page_content(page.document_body);
      visit.page_text = std::move(content.text);
      visit.meta_keywords = std::move(content.meta_keywords);
    }
    visit.requests = std::move(page.requests);
    session.visits.push_back(std::move(visit));
  }
  return session;
}

}  // namespace footprint
