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

#include "core/session_log.hpp"

#include <string>

#include <json.hpp>

#include "core/error.hpp"
#include "core/url.hpp"

namespace footprint {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(size_t line_no, const std::string& what) {
  throw Error::input("session log line " + std::to_string(line_no) + ": " +
                     what);
}

std::string require_string(const json& obj, const char* key, size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    fail(line_no, std::string("missing string field \"") + key + "\"");
  }
  return it->get<std::string>();
}

int require_index(const json& obj, const char* key, size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    fail(line_no, std::string("missing integer field \"") + key + "\"");
  }
  auto value = it->get<int64_t>();
  if (value < 0) fail(line_no, std::string(key) + " must be >= 0");
  return static_cast<int>(value);
}

std::string require_absolute_url(const json& obj, size_t line_no) {
  std::string url = require_string(obj, "url", line_no);
  auto parsed = parse_url(url);
  if (!parsed || parsed->host.empty()) {
    fail(line_no, "\"" + url + "\" is not an absolute URL");
  }
  return url;
}

}  // namespace

BrowsingSession parse_session_log(std::string_view bytes) {
  BrowsingSession session;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= bytes.size()) {
    size_t nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) nl = bytes.size();
    std::string_view line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(line_no, e.what());
    }
    if (!record.is_object()) fail(line_no, "record is not a JSON object");

    std::string type = require_string(record, "type", line_no);
    std::string user = require_string(record, "user", line_no);
    if (user.empty()) fail(line_no, "empty user id");
    if (session.user_id.empty()) {
      session.user_id = user;
    } else if (user != session.user_id) {
      fail(line_no, "user \"" + user + "\" does not match \"" +
                        session.user_id + "\"");
    }

    if (type == "visit") {
      int index = require_index(record, "index", line_no);
      if (index != static_cast<int>(session.visits.size())) {
        fail(line_no, "visit index " + std::to_string(index) +
                          " is not consecutive (expected " +
                          std::to_string(session.visits.size()) + ")");
      }
      PageVisit visit;
      visit.visit_index = index;
      visit.page_url = require_absolute_url(record, line_no);
      if (auto it = record.find("text"); it != record.end()) {
        if (!it->is_string()) fail(line_no, "\"text\" must be a string");
        visit.page_text = it->get<std::string>();
      }
      if (auto it = record.find("meta_keywords"); it != record.end()) {
        if (!it->is_array()) {
          fail(line_no, "\"meta_keywords\" must be an array");
        }
        for (const json& kw : *it) {
          if (!kw.is_string()) {
            fail(line_no, "\"meta_keywords\" entries must be strings");
          }
          visit.meta_keywords.push_back(kw.get<std::string>());
        }
      }
      session.visits.push_back(std::move(visit));
    } else if (type == "request") {
      int index = require_index(record, "visit_index", line_no);
      if (index >= static_cast<int>(session.visits.size())) {
        fail(line_no, "visit_index " + std::to_string(index) +
                          " references a visit not seen yet");
      }
      HttpRequestRecord req;
      req.url = require_absolute_url(record, line_no);
      std::string kind = require_string(record, "kind", line_no);
      auto parsed_kind = resource_kind_from_string(kind);
      if (!parsed_kind) fail(line_no, "unknown kind \"" + kind + "\"");
      req.kind = *parsed_kind;
      if (auto it = record.find("mime"); it != record.end() && !it->is_null()) {
        if (!it->is_string()) fail(line_no, "\"mime\" must be a string");
        req.response_mime = it->get<std::string>();
      }
      session.visits[static_cast<size_t>(index)].requests.push_back(
          std::move(req));
    } else {
      fail(line_no, "unknown record type \"" + type + "\"");
    }
  }

  if (session.visits.empty()) {
    throw Error::input("empty session: log has no visit records");
  }
  return session;
}

std::string write_session_log(const BrowsingSession& session) {
  std::string out;
  for (const PageVisit& visit : session.visits) {
    ordered_json record;
    record["type"] = "visit";
    record["user"] = session.user_id;
    record["index"] = visit.visit_index;
    record["url"] = visit.page_url;
    record["text"] = visit.page_text;
    record["meta_keywords"] = visit.meta_keywords;
    out += record.dump();
    out += '\n';
    for (const HttpRequestRecord& req : visit.requests) {
      ordered_json line;
      line["type"] = "request";
      line["user"] = session.user_id;
      line["visit_index"] = visit.visit_index;
      line["url"] = req.url;
      line["kind"] = to_string(req.kind);
      if (req.response_mime) line["mime"] = *req.response_mime;
      out += line.dump();
      out += '\n';
    }
  }
  return out;
}

}  // namespace footprint
