// Copyright 2026 The fleetplan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLEETPLAN_ERROR_H_
#define FLEETPLAN_ERROR_H_

#include <stdexcept>
#include <string>

namespace fleetplan {

// Bad user input: malformed files, unknown ids, out-of-range parameters.
// The CLI maps this (and std::invalid_argument) to exit code 1.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A CSV row failed validation. `line()` is the 1-based line in the file,
// counting the header as line 1.
class RowError : public InputError {
 public:
  RowError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A computation would exceed a configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace fleetplan

#endif  // FLEETPLAN_ERROR_H_
