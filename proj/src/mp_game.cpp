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

#include "lexsynt/mp_game.hpp"

#include <algorithm>

namespace lexsynt {

std::vector<Rational> mp_values_masked(const GameGraph& g,
                                       std::span<const Int> weights,
                                       Player maximizer,
                                       const std::vector<bool>& edge_mask,
                                       const MpOptions& opt) {
  const size_t n = g.num_states();
  const Int big_n(n);

  // Centering the weights halves the Zwick-Paterson deviation bound.
  Int w_min, w_max;
  bool first = true;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!edge_mask[e]) continue;
    if (first || weights[e] < w_min) w_min = weights[e];
    if (first || weights[e] > w_max) w_max = weights[e];
    first = false;
  }
  if (first) throw ValidationError("mp_values: no edges");
  const Int shift = floor_div(w_min + w_max, Int(2));
  std::vector<Int> w(g.num_edges());
  Int W(0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!edge_mask[e]) continue;
    w[e] = weights[e] - shift;
    Int a = abs(w[e]);
    if (a > W) W = a;
  }
  if (W == 0) W = 1;

  // |v_k(s) - k nu(s)| <= 2nW, and distinct rationals with denominator <= n
  // differ by at least 1/n^2, so uniqueness is certain by k*.
  const Int k_star = 8 * big_n * big_n * big_n * W;
  const Int two_n_w = 2 * big_n * W;

  std::vector<Int> v(n, Int(0)), v_next(n);
  std::vector<std::optional<Rational>> snapped(n);
  size_t snapped_count = 0;

  Int k(0);
  Int next_check(16);
  while (k < k_star && snapped_count < n) {
    opt.deadline.check("mp_values");
    ++k;
    for (StateId s = 0; s < n; ++s) {
      std::optional<Int> best;
      for (EdgeId e : g.out(s)) {
        if (!edge_mask[e]) continue;
        Int cand = w[e] + v[g.edge(e).dst];
        const bool take = !best || (g.owner(s) == maximizer ? cand > *best
                                                            : cand < *best);
        if (take) best = std::move(cand);
      }
      if (!best)
        throw ValidationError("mp_values: state " + g.name(s) +
                              " has no enabled edge");
      v_next[s] = std::move(*best);
    }
    std::swap(v, v_next);

    if (k >= next_check || k == k_star) {
      next_check *= 2;
      for (StateId s = 0; s < n; ++s) {
        if (snapped[s]) continue;
        const Rational center = make_rational(v[s], k);
        const Rational r = make_rational(two_n_w, k);
        if (auto u = unique_rational_in(center - r, center + r, big_n)) {
          snapped[s] = *u;
          ++snapped_count;
        }
      }
    }
  }

  std::vector<Rational> result(n);
  for (StateId s = 0; s < n; ++s) {
    if (!snapped[s])
      throw ValidationError("mp_values: value did not converge (internal)");
    result[s] = *snapped[s] + Rational(shift);
  }
  return result;
}

std::vector<Rational> mp_values(const GameGraph& g, std::span<const Int> weights,
                                Player maximizer, const MpOptions& opt) {
  return mp_values_masked(g, weights, maximizer,
                          std::vector<bool>(g.num_edges(), true), opt);
}

}  // namespace lexsynt
