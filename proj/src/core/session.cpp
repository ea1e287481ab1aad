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

#include "core/session.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "core/url.hpp"

namespace footprint {

namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::optional<ResourceKind> kind_from_mime(std::string_view mime_full) {
  // Strip any parameters ("text/html; charset=utf-8" -> "text/html").
  std::string mime = ascii_lower(mime_full.substr(0, mime_full.find(';')));
  while (!mime.empty() && (mime.back() == ' ' || mime.back() == '\t')) {
    mime.pop_back();
  }
  size_t start = 0;
  while (start < mime.size() && (mime[start] == ' ' || mime[start] == '\t')) {
    ++start;
  }
  mime = mime.substr(start);
  if (mime.empty()) return std::nullopt;

  if (mime == "text/html" || mime == "application/xhtml+xml") {
    return ResourceKind::kDocument;
  }
  if (mime == "text/javascript" || mime == "application/javascript" ||
      mime == "application/x-javascript" || mime == "application/ecmascript" ||
      mime == "text/ecmascript") {
    return ResourceKind::kScript;
  }
  if (mime == "text/css") return ResourceKind::kStylesheet;
  if (mime.rfind("image/", 0) == 0) return ResourceKind::kImage;
  if (mime.rfind("font/", 0) == 0 || mime == "application/font-woff" ||
      mime == "application/font-woff2" || mime == "application/x-font-ttf" ||
      mime == "application/x-font-opentype" ||
      mime == "application/vnd.ms-fontobject") {
    return ResourceKind::kFont;
  }
  if (mime.rfind("audio/", 0) == 0 || mime.rfind("video/", 0) == 0) {
    return ResourceKind::kMedia;
  }
  if (mime == "application/json" || mime == "text/json" ||
      mime == "application/xml" || mime == "text/xml" ||
      mime == "text/plain") {
    return ResourceKind::kXhr;
  }
  return std::nullopt;
}

std::optional<ResourceKind> kind_from_extension(std::string_view url) {
  auto parsed = parse_url(url);
  if (!parsed) return std::nullopt;
  const std::string& path = parsed->path;
  size_t slash = path.rfind('/');
  size_t dot = path.rfind('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return std::nullopt;
  }
  std::string ext = ascii_lower(std::string_view(path).substr(dot + 1));
  // Path parameters can trail the extension ("logo.png;v=2").
  size_t semi = ext.find(';');
  if (semi != std::string::npos) ext = ext.substr(0, semi);

  static const std::array<std::pair<const char*, ResourceKind>, 25> kTable = {{
      {"html", ResourceKind::kDocument},
      {"htm", ResourceKind::kDocument},
      {"xhtml", ResourceKind::kDocument},
      {"js", ResourceKind::kScript},
      {"mjs", ResourceKind::kScript},
      {"css", ResourceKind::kStylesheet},
      {"png", ResourceKind::kImage},
      {"jpg", ResourceKind::kImage},
      {"jpeg", ResourceKind::kImage},
      {"gif", ResourceKind::kImage},
      {"webp", ResourceKind::kImage},
      {"svg", ResourceKind::kImage},
      {"ico", ResourceKind::kImage},
      {"bmp", ResourceKind::kImage},
      {"avif", ResourceKind::kImage},
      {"woff", ResourceKind::kFont},
      {"woff2", ResourceKind::kFont},
      {"ttf", ResourceKind::kFont},
      {"otf", ResourceKind::kFont},
      {"eot", ResourceKind::kFont},
      {"mp3", ResourceKind::kMedia},
      {"mp4", ResourceKind::kMedia},
      {"webm", ResourceKind::kMedia},
      {"ogg", ResourceKind::kMedia},
      {"json", ResourceKind::kXhr},
  }};
  for (const auto& [name, kind] : kTable) {
    if (ext == name) return kind;
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::kDocument:
      return "document";
    case ResourceKind::kScript:
      return "script";
    case ResourceKind::kStylesheet:
      return "stylesheet";
    case ResourceKind::kImage:
      return "image";
    case ResourceKind::kFont:
      return "font";
    case ResourceKind::kMedia:
      return "media";
    case ResourceKind::kXhr:
      return "xhr";
    case ResourceKind::kOther:
      return "other";
  }
  return "other";
}

std::optional<ResourceKind> resource_kind_from_string(std::string_view name) {
  if (name == "document") return ResourceKind::kDocument;
  if (name == "script") return ResourceKind::kScript;
  if (name == "stylesheet") return ResourceKind::kStylesheet;
  if (name == "image") return ResourceKind::kImage;
  if (name == "font") return ResourceKind::kFont;
  if (name == "media") return ResourceKind::kMedia;
  if (name == "xhr") return ResourceKind::kXhr;
  if (name == "other") return ResourceKind::kOther;
  return std::nullopt;
}

ResourceKind infer_resource_kind(std::string_view url,
                                 const std::optional<std::string>& mime) {
  if (mime) {
    if (auto kind = kind_from_mime(*mime)) return *kind;
  }
  if (auto kind = kind_from_extension(url)) return *kind;
  return ResourceKind::kOther;
}

}  // namespace footprint
