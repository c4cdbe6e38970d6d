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

#include "lexsynt/single_player.hpp"

#include <algorithm>
#include <deque>

#include "lexsynt/parity.hpp"
#include "lexsynt/scalarize.hpp"

namespace lexsynt {

namespace {

// best[s] over the full condensation: max/min candidate reachable from s.
std::vector<LexValue> propagate_candidates(
    const GameGraph& g, const std::vector<CycleCandidate>& candidates,
    const std::vector<std::vector<std::uint32_t>>& attached, bool maximize) {
  const size_t n = g.num_states();
  auto sccs = detail::strongly_connected_components(
      g, std::vector<bool>(n, true));
  std::vector<int> comp_best(sccs.count, -1);
  auto better = [&](int a, int b) {  // candidate a strictly better than b
    if (b == -1) return true;
    if (a == -1) return false;
    const Rational& x = candidates[a].scalar_mean;
    const Rational& y = candidates[b].scalar_mean;
    return maximize ? x > y : x < y;
  };
  std::vector<std::vector<StateId>> members(sccs.count);
  for (StateId s = 0; s < n; ++s) members[sccs.comp[s]].push_back(s);
  for (int c = 0; c < sccs.count; ++c) {
    int best = -1;
    for (StateId s : members[c]) {
      for (std::uint32_t cand : attached[s])
        if (better(static_cast<int>(cand), best)) best = static_cast<int>(cand);
      for (EdgeId e : g.out(s)) {
        const int tc = sccs.comp[g.edge(e).dst];
        if (tc != c && better(comp_best[tc], best)) best = comp_best[tc];
      }
    }
    comp_best[c] = best;
  }
  std::vector<LexValue> vals(n, LexValue::bottom());
  for (StateId s = 0; s < n; ++s) {
    const int b = comp_best[sccs.comp[s]];
    if (b != -1) vals[s] = LexValue::vec(candidates[b].vec_mean);
  }
  return vals;
}

}  // namespace

std::vector<LexValue> single_player_max_mpp(const GameGraph& g) {
  g.validate();
  if (!g.has_priorities())
    throw ValidationError("single_player_max_mpp: priorities required");
  const size_t n = g.num_states();
  ScalarizedGame sg = scalarize(g);

  std::vector<CycleCandidate> candidates;
  std::vector<std::vector<std::uint32_t>> attached(n);
  const int maxp = g.max_priority();
  for (int q = 0; q <= maxp; q += 2) {
    std::vector<bool> mask(n, false);
    for (StateId s = 0; s < n; ++s)
      if (*g.priority(s) >= q) mask[s] = true;
    auto sccs = detail::strongly_connected_components(g, mask);
    std::vector<std::vector<StateId>> members(sccs.count);
    std::vector<bool> has_q(sccs.count, false);
    for (StateId s = 0; s < n; ++s) {
      if (!mask[s]) continue;
      members[sccs.comp[s]].push_back(s);
      if (*g.priority(s) == q) has_q[sccs.comp[s]] = true;
    }
    for (int c = 0; c < sccs.count; ++c) {
      if (!has_q[c]) continue;
      auto cand = detail::extreme_cycle_in_scc(g, sg.weights, ExtremeMode::Max,
                                               members[c], mask);
      if (!cand) continue;
      candidates.push_back(std::move(*cand));
      // the candidate is usable from anywhere that reaches the component
      const auto idx = static_cast<std::uint32_t>(candidates.size() - 1);
      attached[members[c][0]].push_back(idx);
    }
  }
  return propagate_candidates(g, candidates, attached, /*maximize=*/true);
}

std::vector<LexValue> single_player_min_mpp(const GameGraph& g) {
  g.validate();
  if (!g.has_priorities())
    throw ValidationError("single_player_min_mpp: priorities required");
  const size_t n = g.num_states();
  std::vector<bool> bad = odd_cycle_reachable(g);

  std::vector<LexValue> vals(n, LexValue::bottom());
  std::vector<bool> good(n, false);
  bool any_good = false;
  for (StateId s = 0; s < n; ++s)
    if (!bad[s]) {
      good[s] = true;
      any_good = true;
    }
  if (!any_good) return vals;

  // Edges from good states stay among good states, and every cycle there
  // has even minimal priority, so the minimizer just heads for the minimal
  // mean cycle.
  OnePlayerExtremes ext =
      one_player_lex_extreme_masked(g, ExtremeMode::Min, good);
  for (StateId s = 0; s < n; ++s)
    if (good[s]) vals[s] = LexValue::vec(ext.candidates[ext.best[s]].vec_mean);
  return vals;
}

std::vector<LexValue> evaluate_strategy(const GameGraph& g,
                                        const FiniteMemoryStrategy& s,
                                        Player owner) {
  validate_strategy(g, s, owner);
  StrategyProduct prod = strategy_product(g, s, owner);
  std::vector<LexValue> pvals;
  if (g.has_priorities()) {
    pvals = owner == Player::P1 ? single_player_min_mpp(prod.graph)
                                : single_player_max_mpp(prod.graph);
  } else {
    const ExtremeMode mode =
        owner == Player::P1 ? ExtremeMode::Min : ExtremeMode::Max;
    OnePlayerExtremes ext = one_player_lex_extreme(prod.graph, mode);
    pvals.assign(prod.graph.num_states(), LexValue::bottom());
    for (StateId p = 0; p < prod.graph.num_states(); ++p)
      pvals[p] = LexValue::vec(ext.candidates[ext.best[p]].vec_mean);
  }
  std::vector<LexValue> vals(g.num_states());
  for (StateId st = 0; st < g.num_states(); ++st)
    vals[st] = pvals[prod.seed[st]];
  return vals;
}

}  // namespace lexsynt
