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

#ifndef FOOTPRINT_CORE_ERROR_HPP_
#define FOOTPRINT_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace footprint {

// Two failure classes: bad input data or configuration (maps to exit
// code 2 at the CLI) and broken internal invariants (exit code 3).
enum class ErrorKind { kInput, kInternal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  static Error input(std::string message) {
    return Error(ErrorKind::kInput, std::move(message));
  }
  static Error internal(std::string message) {
    return Error(ErrorKind::kInternal, std::move(message));
  }

 private:
  ErrorKind kind_;
};

}  // namespace footprint

#endif  // FOOTPRINT_CORE_ERROR_HPP_
