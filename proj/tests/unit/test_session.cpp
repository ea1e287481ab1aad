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

#include <optional>
#include <string>

#include "doctest.h"

using footprint::ResourceKind;
using footprint::infer_resource_kind;
using footprint::resource_kind_from_string;
using footprint::to_string;

namespace {
std::optional<std::string> mime(const char* m) { return std::string(m); }
}  // namespace

TEST_CASE("MIME types map onto resource kinds") {
  CHECK(infer_resource_kind("http://x.example/a", mime("text/html")) == ResourceKind::kDocument);
  CHECK(infer_resource_kind("http://x.example/a", mime("application/xhtml+xml")) == ResourceKind::kDocument);
  CHECK(infer_resource_kind("http://x.example/a", mime("application/javascript")) == ResourceKind::kScript);
  CHECK(infer_resource_kind("http://x.example/a", mime("text/javascript")) == ResourceKind::kScript);
  CHECK(infer_resource_kind("http://x.example/a", mime("text/css")) == ResourceKind::kStylesheet);
  CHECK(infer_resource_kind("http://x.example/a", mime("image/png")) == ResourceKind::kImage);
  CHECK(infer_resource_kind("http://x.example/a", mime("image/svg+xml")) == ResourceKind::kImage);
  CHECK(infer_resource_kind("http://x.example/a", mime("font/woff2")) == ResourceKind::kFont);
  CHECK(infer_resource_kind("http://x.example/a", mime("application/font-woff")) == ResourceKind::kFont);
  CHECK(infer_resource_kind("http://x.example/a", mime("audio/mpeg")) == ResourceKind::kMedia);
  CHECK(infer_resource_kind("http://x.example/a", mime("video/mp4")) == ResourceKind::kMedia);
  CHECK(infer_resource_kind("http://x.example/a", mime("application/json")) == ResourceKind::kXhr);
  CHECK(infer_resource_kind("http://x.example/a", mime("text/plain")) == ResourceKind::kXhr);
  CHECK(infer_resource_kind("http://x.example/a", mime("application/octet-stream")) == ResourceKind::kOther);
}

TEST_CASE("MIME parameters and case are ignored") {
  CHECK(infer_resource_kind("http://x.example/a", mime("Text/HTML; charset=UTF-8")) == ResourceKind::kDocument);
  CHECK(infer_resource_kind("http://x.example/a", mime(" text/css ")) == ResourceKind::kStylesheet);
}

TEST_CASE("extension fallback applies when the MIME type is absent") {
  CHECK(infer_resource_kind("http://x.example/app.js", std::nullopt) == ResourceKind::kScript);
  CHECK(infer_resource_kind("http://x.example/style.css", std::nullopt) == ResourceKind::kStylesheet);
  CHECK(infer_resource_kind("http://x.example/logo.png", std::nullopt) == ResourceKind::kImage);
  CHECK(infer_resource_kind("http://x.example/f.woff2", std::nullopt) == ResourceKind::kFont);
  CHECK(infer_resource_kind("http://x.example/page.html", std::nullopt) == ResourceKind::kDocument);
  CHECK(infer_resource_kind("http://x.example/feed.json", std::nullopt) == ResourceKind::kXhr);
  CHECK(infer_resource_kind("http://x.example/clip.mp4", std::nullopt) == ResourceKind::kMedia);
  CHECK(infer_resource_kind("http://x.example/blob.bin", std::nullopt) == ResourceKind::kOther);
  CHECK(infer_resource_kind("http://x.example/noext", std::nullopt) == ResourceKind::kOther);
}

TEST_CASE("extension fallback survives queries and path parameters") {
  CHECK(infer_resource_kind("http://x.example/logo.png;v=2", std::nullopt) == ResourceKind::kImage);
  CHECK(infer_resource_kind("http://x.example/app.js?cb=123", std::nullopt) == ResourceKind::kScript);
}

TEST_CASE("a known MIME type outranks the URL extension") {
  CHECK(infer_resource_kind("http://x.example/looks-like.js", mime("text/css")) == ResourceKind::kStylesheet);
  // An unrecognised MIME type falls through to the extension.
  CHECK(infer_resource_kind("http://x.example/app.js", mime("application/x-custom")) == ResourceKind::kScript);
}

TEST_CASE("resource kind names round-trip") {
  for (ResourceKind k :
       {ResourceKind::kDocument, ResourceKind::kScript, ResourceKind::kStylesheet,
        ResourceKind::kImage, ResourceKind::kFont, ResourceKind::kMedia,
        ResourceKind::kXhr, ResourceKind::kOther}) {
    auto back = resource_kind_from_string(to_string(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK_FALSE(resource_kind_from_string("bogus").has_value());
}
