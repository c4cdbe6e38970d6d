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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "lexsynt/errors.hpp"

namespace lexsynt {

// All arithmetic in this project is exact.  There is no floating point
// anywhere; values are arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(Int n, Int d) {
  if (d == 0) throw ValidationError("rational with zero denominator");
  return Rational(std::move(n), std::move(d));
}

// Floor division for arbitrary-precision integers (cpp_int '/' truncates
// toward zero).  Requires d > 0.
inline Int floor_div(const Int& n, const Int& d) {
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline Int ceil_div(const Int& n, const Int& d) {
  Int q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

inline Int floor_rat(const Rational& q) { return floor_div(num(q), den(q)); }
inline Int ceil_rat(const Rational& q) { return ceil_div(num(q), den(q)); }

inline std::string to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) s += "/" + den(q).str();
  return s;
}

inline bool denominator_at_most(const Rational& q, const Int& n) {
  return den(q) <= n;
}

// The unique rational p/q with q <= max_den inside [lo, hi], if there is
// exactly one such value.  Used to snap approximate game values onto the
// denominator grid and to certify bracketed values.
std::optional<Rational> unique_rational_in(const Rational& lo,
                                           const Rational& hi,
                                           const Int& max_den);

// The rational with denominator <= max_den closest to x (any of them on a
// tie).  max_den >= 1.
Rational nearest_with_denominator(const Rational& x, const Int& max_den);

}  // namespace lexsynt
