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

#include "lexsynt/parity.hpp"

#include <algorithm>
#include <deque>

#include "lexsynt/scalarize.hpp"

namespace lexsynt {

AttractorResult attractor_masked(const GameGraph& g, Player p,
                                 const std::vector<bool>& target,
                                 const std::vector<bool>& active) {
  const size_t n = g.num_states();
  AttractorResult res;
  res.set.assign(n, false);
  res.strategy.moves.assign(n, std::nullopt);

  // Opponent states fall in once all their active edges do.
  std::vector<unsigned> remaining(n, 0);
  std::vector<std::vector<EdgeId>> in_edges(n);
  for (StateId s = 0; s < n; ++s) {
    if (!active[s]) continue;
    for (EdgeId e : g.out(s)) {
      const StateId t = g.edge(e).dst;
      if (!active[t]) continue;
      ++remaining[s];
      in_edges[t].push_back(e);
    }
  }

  std::deque<StateId> queue;
  for (StateId s = 0; s < n; ++s)
    if (active[s] && target[s]) {
      res.set[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const StateId t = queue.front();
    queue.pop_front();
    for (EdgeId e : in_edges[t]) {
      const StateId s = g.edge(e).src;
      if (res.set[s]) continue;
      if (g.owner(s) == p) {
        res.set[s] = true;
        res.strategy.moves[s] = e;
        queue.push_back(s);
      } else if (--remaining[s] == 0) {
        res.set[s] = true;
        queue.push_back(s);
      }
    }
  }
  return res;
}

AttractorResult attractor(const GameGraph& g, Player p,
                          const std::vector<bool>& target) {
  return attractor_masked(g, p, target,
                          std::vector<bool>(g.num_states(), true));
}

namespace {

void zielonka(const GameGraph& g, const std::vector<bool>& active,
              WinningRegions& out) {
  const size_t n = g.num_states();
  std::optional<int> min_p;
  for (StateId s = 0; s < n; ++s)
    if (active[s] && (!min_p || *g.priority(s) < *min_p)) min_p = *g.priority(s);
  if (!min_p) return;  // empty subgame

  const Player alpha = (*min_p % 2 == 0) ? Player::P1 : Player::P2;
  const Player beta = opponent(alpha);
  auto& w_alpha = alpha == Player::P1 ? out.w1 : out.w2;
  auto& w_beta = alpha == Player::P1 ? out.w2 : out.w1;
  auto& strat_alpha = alpha == Player::P1 ? out.strat1 : out.strat2;
  auto& strat_beta = alpha == Player::P1 ? out.strat2 : out.strat1;

  std::vector<bool> target(n, false);
  for (StateId s = 0; s < n; ++s)
    if (active[s] && *g.priority(s) == *min_p) target[s] = true;

  AttractorResult attr = attractor_masked(g, alpha, target, active);

  std::vector<bool> rest(n, false);
  bool rest_empty = true;
  for (StateId s = 0; s < n; ++s)
    if (active[s] && !attr.set[s]) {
      rest[s] = true;
      rest_empty = false;
    }

  WinningRegions sub;
  sub.w1.assign(n, false);
  sub.w2.assign(n, false);
  sub.strat1.moves.assign(n, std::nullopt);
  sub.strat2.moves.assign(n, std::nullopt);
  if (!rest_empty) zielonka(g, rest, sub);

  const auto& sub_w_beta = beta == Player::P1 ? sub.w1 : sub.w2;
  bool beta_wins_somewhere = false;
  for (StateId s = 0; s < n; ++s)
    if (sub_w_beta[s]) beta_wins_somewhere = true;

  if (!beta_wins_somewhere) {
    // alpha wins everywhere: attractor strategy on A minus the target, any
    // in-subgame edge at owned target states, recursive strategy elsewhere.
    const auto& sub_strat_alpha = alpha == Player::P1 ? sub.strat1 : sub.strat2;
    for (StateId s = 0; s < n; ++s) {
      if (!active[s]) continue;
      w_alpha[s] = true;
      if (g.owner(s) != alpha) continue;
      if (target[s]) {
        for (EdgeId e : g.out(s))
          if (active[g.edge(e).dst]) {
            strat_alpha.moves[s] = e;
            break;
          }
      } else if (attr.set[s]) {
        strat_alpha.moves[s] = attr.strategy.moves[s];
      } else {
        strat_alpha.moves[s] = sub_strat_alpha.moves[s];
      }
    }
    return;
  }

  AttractorResult battr = attractor_masked(g, beta, sub_w_beta, active);
  std::vector<bool> rest2(n, false);
  bool rest2_empty = true;
  for (StateId s = 0; s < n; ++s)
    if (active[s] && !battr.set[s]) {
      rest2[s] = true;
      rest2_empty = false;
    }

  WinningRegions sub2;
  sub2.w1.assign(n, false);
  sub2.w2.assign(n, false);
  sub2.strat1.moves.assign(n, std::nullopt);
  sub2.strat2.moves.assign(n, std::nullopt);
  if (!rest2_empty) zielonka(g, rest2, sub2);

  const auto& sub_strat_beta = beta == Player::P1 ? sub.strat1 : sub.strat2;
  const auto& sub2_w_alpha = alpha == Player::P1 ? sub2.w1 : sub2.w2;
  const auto& sub2_w_beta = beta == Player::P1 ? sub2.w1 : sub2.w2;
  const auto& sub2_strat_alpha = alpha == Player::P1 ? sub2.strat1 : sub2.strat2;
  const auto& sub2_strat_beta = beta == Player::P1 ? sub2.strat1 : sub2.strat2;

  for (StateId s = 0; s < n; ++s) {
    if (!active[s]) continue;
    if (battr.set[s]) {
      w_beta[s] = true;
      if (g.owner(s) != beta) continue;
      if (sub_w_beta[s])
        strat_beta.moves[s] = sub_strat_beta.moves[s];
      else
        strat_beta.moves[s] = battr.strategy.moves[s];
    } else if (sub2_w_alpha[s]) {
      w_alpha[s] = true;
      if (g.owner(s) == alpha) strat_alpha.moves[s] = sub2_strat_alpha.moves[s];
    } else if (sub2_w_beta[s]) {
      w_beta[s] = true;
      if (g.owner(s) == beta) strat_beta.moves[s] = sub2_strat_beta.moves[s];
    }
  }
}

}  // namespace

WinningRegions solve_parity(const GameGraph& g) {
  g.validate();
  if (!g.has_priorities())
    throw ValidationError("solve_parity: graph has no priorities");
  const size_t n = g.num_states();
  WinningRegions out;
  out.w1.assign(n, false);
  out.w2.assign(n, false);
  out.strat1.moves.assign(n, std::nullopt);
  out.strat2.moves.assign(n, std::nullopt);
  zielonka(g, std::vector<bool>(n, true), out);
  return out;
}

namespace {

std::vector<bool> reachable_set(const GameGraph& g, StateId from) {
  std::vector<bool> seen(g.num_states(), false);
  std::deque<StateId> q{from};
  seen[from] = true;
  while (!q.empty()) {
    StateId s = q.front();
    q.pop_front();
    for (EdgeId e : g.out(s))
      if (!seen[g.edge(e).dst]) {
        seen[g.edge(e).dst] = true;
        q.push_back(g.edge(e).dst);
      }
  }
  return seen;
}

// Components of the priority->=q subgraph that witness an odd-q cycle.
// Returns, per state, the odd priority q it witnesses (or -1).
std::vector<int> odd_witness_cores(const GameGraph& g) {
  const size_t n = g.num_states();
  std::vector<int> core(n, -1);
  const int maxp = g.max_priority();
  for (int q = 1; q <= maxp; q += 2) {
    std::vector<bool> mask(n, false);
    for (StateId s = 0; s < n; ++s)
      if (*g.priority(s) >= q) mask[s] = true;
    auto sccs = detail::strongly_connected_components(g, mask);
    // component -> has a q-state, has an internal edge, size
    std::vector<bool> has_q(sccs.count, false), has_edge(sccs.count, false);
    std::vector<unsigned> size(sccs.count, 0);
    std::vector<bool> q_selfloop(n, false);
    for (StateId s = 0; s < n; ++s) {
      if (!mask[s]) continue;
      ++size[sccs.comp[s]];
      if (*g.priority(s) == q) has_q[sccs.comp[s]] = true;
      for (EdgeId e : g.out(s)) {
        const StateId t = g.edge(e).dst;
        if (mask[t] && sccs.comp[t] == sccs.comp[s]) {
          has_edge[sccs.comp[s]] = true;
          if (t == s && *g.priority(s) == q) q_selfloop[s] = true;
        }
      }
    }
    for (StateId s = 0; s < n; ++s) {
      if (!mask[s] || core[s] != -1) continue;
      const int c = sccs.comp[s];
      if (!has_q[c] || !has_edge[c]) continue;
      // a singleton component needs the self-loop on the q-state itself
      if (size[c] == 1 && !q_selfloop[s]) continue;
      core[s] = q;
    }
  }
  return core;
}

}  // namespace

std::vector<bool> odd_cycle_reachable(const GameGraph& g) {
  const size_t n = g.num_states();
  std::vector<int> core = odd_witness_cores(g);
  // backward closure over all edges
  std::vector<bool> bad(n, false);
  std::deque<StateId> q;
  for (StateId s = 0; s < n; ++s)
    if (core[s] != -1) {
      bad[s] = true;
      q.push_back(s);
    }
  std::vector<std::vector<StateId>> preds(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    preds[g.edge(e).dst].push_back(g.edge(e).src);
  while (!q.empty()) {
    StateId t = q.front();
    q.pop_front();
    for (StateId s : preds[t])
      if (!bad[s]) {
        bad[s] = true;
        q.push_back(s);
      }
  }
  return bad;
}

std::optional<Lasso> odd_lasso_exists(const GameGraph& g) {
  g.validate();
  if (!g.has_priorities())
    throw ValidationError("odd_lasso_exists: graph has no priorities");
  const size_t n = g.num_states();
  std::vector<bool> reach = reachable_set(g, g.initial());
  std::vector<int> core = odd_witness_cores(g);

  // pick the reachable core state (prefer determinism: lowest id)
  for (StateId s = 0; s < n; ++s) {
    if (!reach[s] || core[s] == -1) continue;
    const int q = core[s];
    std::vector<bool> mask(n, false);
    for (StateId t = 0; t < n; ++t)
      if (*g.priority(t) >= q) mask[t] = true;
    auto sccs = detail::strongly_connected_components(g, mask);
    // cycle through s within its component
    std::vector<bool> comp_mask(n, false);
    for (StateId t = 0; t < n; ++t)
      if (mask[t] && sccs.comp[t] == sccs.comp[s]) comp_mask[t] = true;
    std::vector<EdgeId> cycle;
    // first step away from s (or its self-loop), then BFS back to s
    std::vector<bool> target(n, false);
    target[s] = true;
    for (EdgeId e : g.out(s)) {
      const StateId t = g.edge(e).dst;
      if (!comp_mask[t]) continue;
      if (t == s) {
        cycle = {e};
        break;
      }
      if (auto back = detail::bfs_path(g, t, target, comp_mask)) {
        cycle = {e};
        cycle.insert(cycle.end(), back->begin(), back->end());
        break;
      }
    }
    if (cycle.empty()) continue;
    Lasso l;
    l.start = g.initial();
    std::vector<bool> to_s(n, false);
    to_s[s] = true;
    auto prefix = detail::bfs_path(g, g.initial(), to_s, reach);
    l.prefix = *prefix;
    l.cycle = std::move(cycle);
    validate_lasso(g, l);
    if (lasso_parity(g, l) != CycleParity::Odd)
      throw ValidationError("odd_lasso_exists: witness is not odd (internal)");
    return l;
  }
  return std::nullopt;
}

}  // namespace lexsynt
