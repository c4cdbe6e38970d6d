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

#include "lexsynt/lexmp.hpp"

#include <algorithm>

namespace lexsynt {

namespace {

// Commits, for every state owned by `p`, the lowest-indexed outgoing edge
// whose commitment preserves the whole value map of the (already reduced)
// game.  Such an edge always exists: any optimal memoryless strategy's edge
// preserves the map exactly.
void fix_player_edges(const GameGraph& g, std::span<const Int> weights,
                      Player maximizer, const std::vector<Rational>& base,
                      std::vector<bool>& edge_mask, Player p,
                      MemorylessStrategy& out, const MpOptions& opt) {
  out.moves.assign(g.num_states(), std::nullopt);
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (g.owner(s) != p) continue;
    const auto edges = g.out(s);
    std::vector<EdgeId> enabled;
    for (EdgeId e : edges)
      if (edge_mask[e]) enabled.push_back(e);
    if (enabled.size() == 1) {
      out.moves[s] = enabled[0];
      continue;
    }
    bool committed = false;
    for (EdgeId cand : enabled) {
      for (EdgeId e : enabled) edge_mask[e] = (e == cand);
      std::vector<Rational> vals =
          mp_values_masked(g, weights, maximizer, edge_mask, opt);
      if (vals == base) {
        out.moves[s] = cand;
        committed = true;
        break;
      }
    }
    if (!committed)
      throw ValidationError("strategy extraction found no value-preserving edge (internal)");
  }
}

}  // namespace

LexMpSolution lex_mp_solve_directed(const GameGraph& g, Player maximizer,
                                    const MpOptions& opt) {
  ScalarizedGame sg = scalarize(g);
  LexMpSolution sol;
  sol.multipliers = sg.multipliers;
  sol.scalar = mp_values(g, sg.weights, maximizer, opt);

  // Each player's strategy is extracted against the free opponent; an edge
  // that only preserves the value against the other player's fixed choices
  // need not be optimal.
  std::vector<bool> mask_max(g.num_edges(), true);
  std::vector<bool> mask_min(g.num_edges(), true);
  fix_player_edges(g, sg.weights, maximizer, sol.scalar, mask_max, maximizer,
                   maximizer == Player::P1 ? sol.p1 : sol.p2, opt);
  fix_player_edges(g, sg.weights, maximizer, sol.scalar, mask_min,
                   opponent(maximizer),
                   maximizer == Player::P1 ? sol.p2 : sol.p1, opt);

  // Both strategies fixed: one successor per state.  Each state's value
  // vector is the component-wise mean of its induced cycle.
  const size_t n = g.num_states();
  const size_t d = g.dimension();
  std::vector<EdgeId> succ(n);
  for (StateId s = 0; s < n; ++s)
    succ[s] = g.owner(s) == maximizer
                  ? (maximizer == Player::P1 ? sol.p1 : sol.p2).at(s)
                  : (maximizer == Player::P1 ? sol.p2 : sol.p1).at(s);

  sol.values.assign(n, LexValue::bottom());
  std::vector<int> stamp(n, -1);
  for (StateId s0 = 0; s0 < n; ++s0) {
    if (!sol.values[s0].is_bottom()) continue;
    // walk to the cycle
    std::vector<StateId> path;
    StateId at = s0;
    while (stamp[at] == -1 && sol.values[at].is_bottom()) {
      stamp[at] = static_cast<int>(s0);
      path.push_back(at);
      at = g.edge(succ[at]).dst;
    }
    LexValue val;
    if (!sol.values[at].is_bottom()) {
      val = sol.values[at];
    } else {
      // `at` starts the cycle discovered in this walk
      std::vector<Int> total(d, Int(0));
      Int len(0);
      StateId c = at;
      do {
        for (size_t i = 0; i < d; ++i) total[i] += g.edge(succ[c]).reward[i];
        ++len;
        c = g.edge(succ[c]).dst;
      } while (c != at);
      std::vector<Rational> mean(d);
      for (size_t i = 0; i < d; ++i) mean[i] = make_rational(total[i], len);
      val = LexValue::vec(std::move(mean));
    }
    for (StateId p : path) sol.values[p] = val;
  }

  // The vector values must scalarize back to the game values exactly.
  for (StateId s = 0; s < n; ++s) {
    Rational acc(0);
    for (size_t i = 0; i < d; ++i)
      acc += Rational(sol.multipliers[i]) * sol.values[s].as_vec()[i];
    if (acc != sol.scalar[s])
      throw ValidationError("lex_mp_solve: strategy certification failed (internal)");
  }
  return sol;
}

LexMpSolution lex_mp_solve(const GameGraph& g, const MpOptions& opt) {
  return lex_mp_solve_directed(g, Player::P1, opt);
}

std::vector<LexValue> best_response_value(const GameGraph& g,
                                          const MemorylessStrategy& fixed,
                                          Player owner) {
  GameGraph r = restrict_to_strategy(g, fixed, owner);
  const ExtremeMode mode =
      owner == Player::P1 ? ExtremeMode::Min : ExtremeMode::Max;
  OnePlayerExtremes ext = one_player_lex_extreme(r, mode);
  std::vector<LexValue> vals(g.num_states());
  for (StateId s = 0; s < g.num_states(); ++s)
    vals[s] = LexValue::vec(ext.candidates[ext.best[s]].vec_mean);
  return vals;
}

}  // namespace lexsynt
