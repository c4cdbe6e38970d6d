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

#include "lexsynt/numbers.hpp"

namespace lexsynt {

std::optional<Rational> unique_rational_in(const Rational& lo,
                                           const Rational& hi,
                                           const Int& max_den) {
  if (lo > hi) return std::nullopt;
  std::optional<Rational> found;
  for (Int q = 1; q <= max_den; ++q) {
    // p/q in [lo, hi]  <=>  ceil(lo*q) <= p <= floor(hi*q)
    Int p = ceil_rat(lo * q);
    Int p_hi = floor_rat(hi * q);
    for (; p <= p_hi; ++p) {
      Rational cand = make_rational(p, q);
      if (!found) {
        found = cand;
      } else if (*found != cand) {
        return std::nullopt;
      }
    }
  }
  return found;
}

Rational nearest_with_denominator(const Rational& x, const Int& max_den) {
  Rational best;
  Rational best_err(-1);
  for (Int q = 1; q <= max_den; ++q) {
    // nearest integer numerator for denominator q
    Int p = floor_rat(x * q + Rational(1, 2));
    Rational cand = make_rational(p, q);
    Rational err = cand > x ? cand - x : x - cand;
    if (best_err < 0 || err < best_err) {
      best = cand;
      best_err = err;
    }
  }
  return best;
}

}  // namespace lexsynt
