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

#include <cassert>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "lexsynt/errors.hpp"
#include "lexsynt/numbers.hpp"

namespace lexsynt {

// Either Bottom (the parity-losing payoff, least element) or a vector of
// rationals ordered lexicographically.  Bottom stands in for the -1 payoff;
// the ordering agrees because all rewards, hence all means, are >= 0.
class LexValue {
 public:
  LexValue() : bottom_(true) {}

  static LexValue bottom() { return LexValue(); }
  static LexValue vec(std::vector<Rational> v) {
    LexValue x;
    x.bottom_ = false;
    x.vec_ = std::move(v);
    return x;
  }
  static LexValue scalar(Rational r) { return vec({std::move(r)}); }

  bool is_bottom() const { return bottom_; }
  const std::vector<Rational>& as_vec() const {
    assert(!bottom_);
    return vec_;
  }
  size_t dimension() const { return vec_.size(); }

  friend bool operator==(const LexValue& a, const LexValue& b) {
    if (a.bottom_ != b.bottom_) return false;
    if (a.bottom_) return true;
    return a.vec_ == b.vec_;
  }

 private:
  bool bottom_;
  std::vector<Rational> vec_;
};

enum class Ordering { Less, Equal, Greater };

// Total order: Bottom least; vectors by first differing component.
// Throws on dimension mismatch between two vector values.
inline Ordering lex_compare(const LexValue& a, const LexValue& b) {
  if (a.is_bottom() && b.is_bottom()) return Ordering::Equal;
  if (a.is_bottom()) return Ordering::Less;
  if (b.is_bottom()) return Ordering::Greater;
  const auto& u = a.as_vec();
  const auto& v = b.as_vec();
  if (u.size() != v.size())
    throw ValidationError("lex_compare: dimension mismatch (" +
                          std::to_string(u.size()) + " vs " +
                          std::to_string(v.size()) + ")");
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] < v[i]) return Ordering::Less;
    if (u[i] > v[i]) return Ordering::Greater;
  }
  return Ordering::Equal;
}

inline bool lex_less(const LexValue& a, const LexValue& b) {
  return lex_compare(a, b) == Ordering::Less;
}
inline bool lex_leq(const LexValue& a, const LexValue& b) {
  return lex_compare(a, b) != Ordering::Greater;
}
inline const LexValue& lex_min(const LexValue& a, const LexValue& b) {
  return lex_less(b, a) ? b : a;
}
inline const LexValue& lex_max(const LexValue& a, const LexValue& b) {
  return lex_less(a, b) ? b : a;
}

// "(2)", "(1,1/2)", "bot"
inline std::string to_string(const LexValue& v) {
  if (v.is_bottom()) return "bot";
  std::string s = "(";
  const auto& w = v.as_vec();
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s + ")";
}

}  // namespace lexsynt
