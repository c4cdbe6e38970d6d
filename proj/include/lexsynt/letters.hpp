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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexsynt/errors.hpp"

namespace lexsynt {

// A letter is a total sign assignment over a declared signal set: bit i is
// the value of signal i in declaration order.  Two letters over the same
// signal set are equal iff their assignments are.
struct Letter {
  std::uint32_t bits = 0;

  bool test(unsigned i) const { return (bits >> i) & 1u; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A declared, ordered signal set.  At most 20 signals so the alphabet
// (2^n letters) stays enumerable.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> signals)
      : signals_(std::move(signals)) {
    if (signals_.size() > 20)
      throw ValidationError("more than 20 signals declared");
    for (size_t i = 0; i < signals_.size(); ++i)
      for (size_t j = i + 1; j < signals_.size(); ++j)
        if (signals_[i] == signals_[j])
          throw ValidationError("duplicate signal '" + signals_[i] + "'");
  }

  size_t size() const { return signals_.size(); }
  std::uint32_t letter_count() const { return 1u << signals_.size(); }
  const std::vector<std::string>& signals() const { return signals_; }
  const std::string& signal(unsigned i) const { return signals_[i]; }

  std::optional<unsigned> index_of(const std::string& name) const {
    for (size_t i = 0; i < signals_.size(); ++i)
      if (signals_[i] == name) return static_cast<unsigned>(i);
    return std::nullopt;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> signals_;
};

// "{r,-g}": every signal listed in declaration order with its polarity.
std::string format_letter(const Alphabet& a, Letter l);

// A finite word u v^omega given as prefix u and nonempty cycle v.
struct Word {
  std::vector<Letter> prefix;
  std::vector<Letter> cycle;
};

}  // namespace lexsynt
