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

#ifndef FOOTPRINT_CORE_SESSION_LOG_HPP_
#define FOOTPRINT_CORE_SESSION_LOG_HPP_

#include <string>
#include <string_view>

#include "core/session.hpp"

namespace footprint {

// Line-delimited JSON session log. Two record shapes, discriminated
// by "type":
//
//   {"type":"visit","user":U,"index":N,"url":...,"text":...,
//    "meta_keywords":[...]}
//   {"type":"request","user":U,"visit_index":N,"url":...,"kind":K,
//    "mime":M}
//
// "mime" is omitted when unknown; "kind" is one of the ResourceKind
// names. A request line must follow the visit it references.

// Throws Error{kInput} naming the offending line on any schema
// violation (bad JSON, unknown type or kind, relative URL, user
// mismatch, non-consecutive visit indices, dangling visit_index), and
// on a log with no visits ("empty session").
BrowsingSession parse_session_log(std::string_view bytes);

// Serializes a session in the format above, one record per line,
// visits interleaved with their requests. Inverse of
// parse_session_log up to field defaulting.
std::string write_session_log(const BrowsingSession& session);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_SESSION_LOG_HPP_
