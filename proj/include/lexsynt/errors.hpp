// Copyright 2026 The lexsynt authors
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

#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace lexsynt {

// Syntax-level failure while reading one of the text formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Semantic failure: incomplete automaton, duplicate letter, dangling state,
// dimension mismatch, precondition violation.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

// A resource cap (deadline, memory cap, enumeration cap) was exceeded.
// Always reported, never silently truncated.
class ResourceCapError : public std::runtime_error {
 public:
  explicit ResourceCapError(const std::string& what)
      : std::runtime_error(what) {}
};

// Cooperative deadline.  Long-running solvers call check() at loop
// boundaries; an unset deadline never fires.
class Deadline {
 public:
  Deadline() = default;

  static Deadline after_seconds(double s) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(s));
    return d;
  }

  void check(const char* where) const {
    if (at_ && std::chrono::steady_clock::now() > *at_)
      throw ResourceCapError(std::string("deadline exceeded in ") + where);
  }

  bool set() const { return at_.has_value(); }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace lexsynt
