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

#ifndef FOOTPRINT_CORE_DEFAULT_DATA_HPP_
#define FOOTPRINT_CORE_DEFAULT_DATA_HPP_

// Text assets from data/ embedded at build time (see cmake/embed_text.cmake).

namespace footprint::data {

extern const char kTaxonomy[];
extern const char kStopwords[];
extern const char kPublicSuffixList[];

}  // namespace footprint::data

#endif  // FOOTPRINT_CORE_DEFAULT_DATA_HPP_
