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

#include "lexsynt/scalarize.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace lexsynt {

ScalarizedGame scalarize(const GameGraph& g) {
  g.validate();
  const size_t d = g.dimension();
  const Int n2 = Int(g.num_states()) * Int(g.num_states());

  ScalarizedGame sg;
  sg.base = g;
  sg.multipliers.assign(d, Int(1));
  sg.weights.assign(g.num_edges(), Int(0));
  if (d == 0) return sg;

  // Right to left: the tail weight of components i+1..d bounds the tail
  // contribution of any edge, so m_i = |S|^2 * maxtail + 1 dominates it on
  // cycles of length <= |S|.
  std::vector<Int> tail(g.num_edges(), Int(0));
  for (size_t i = d; i-- > 0;) {
    if (i + 1 < d) {
      Int max_tail(0);
      for (EdgeId e = 0; e < g.num_edges(); ++e)
        max_tail = std::max(max_tail, tail[e]);
      sg.multipliers[i] = n2 * max_tail + 1;
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      tail[e] += sg.multipliers[i] * g.edge(e).reward[i];
  }
  sg.weights = std::move(tail);
  return sg;
}

namespace detail {

SccResult strongly_connected_components(const GameGraph& g,
                                        const std::vector<bool>& states) {
  const size_t n = g.num_states();
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  int next_index = 0;

  // Iterative Tarjan.
  struct Frame {
    StateId s;
    size_t edge_pos;
  };
  std::vector<Frame> call;
  for (StateId root = 0; root < n; ++root) {
    if (!states[root] || index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto edges = g.out(f.s);
      bool descended = false;
      while (f.edge_pos < edges.size()) {
        const Edge& ed = g.edge(edges[f.edge_pos]);
        ++f.edge_pos;
        if (!states[ed.dst]) continue;
        if (index[ed.dst] == -1) {
          index[ed.dst] = low[ed.dst] = next_index++;
          stack.push_back(ed.dst);
          on_stack[ed.dst] = true;
          call.push_back({ed.dst, 0});
          descended = true;
          break;
        } else if (on_stack[ed.dst]) {
          low[f.s] = std::min(low[f.s], index[ed.dst]);
        }
      }
      if (descended) continue;
      if (low[f.s] == index[f.s]) {
        while (true) {
          StateId w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          res.comp[w] = res.count;
          if (w == f.s) break;
        }
        ++res.count;
      }
      StateId done = f.s;
      call.pop_back();
      if (!call.empty()) low[call.back().s] = std::min(low[call.back().s], low[done]);
    }
  }
  return res;
}

std::optional<std::vector<EdgeId>> bfs_path(const GameGraph& g, StateId from,
                                            const std::vector<bool>& target,
                                            const std::vector<bool>& states) {
  if (target[from]) return std::vector<EdgeId>{};
  std::vector<std::optional<EdgeId>> via(g.num_states());
  std::vector<bool> seen(g.num_states(), false);
  std::deque<StateId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out(s)) {
      const StateId t = g.edge(e).dst;
      if (!states[t] || seen[t]) continue;
      seen[t] = true;
      via[t] = e;
      if (target[t]) {
        std::vector<EdgeId> path;
        for (StateId at = t; at != from; at = g.edge(*via[at]).src)
          path.push_back(*via[at]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

std::vector<EdgeId> rotate_cycle(const GameGraph& g,
                                 const std::vector<EdgeId>& cycle, StateId at) {
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (g.edge(cycle[i]).src == at) {
      std::vector<EdgeId> rot(cycle.begin() + static_cast<long>(i), cycle.end());
      rot.insert(rot.end(), cycle.begin(), cycle.begin() + static_cast<long>(i));
      return rot;
    }
  }
  throw ValidationError("rotate_cycle: state not on cycle");
}

std::optional<CycleCandidate> extreme_cycle_in_scc(
    const GameGraph& g, std::span<const Int> weights, ExtremeMode mode,
    const std::vector<StateId>& members, const std::vector<bool>& states) {
  const size_t n = members.size();
  std::vector<int> local(g.num_states(), -1);
  for (size_t i = 0; i < n; ++i) local[members[i]] = static_cast<int>(i);

  std::vector<std::pair<EdgeId, Int>> edges;  // edges internal to the SCC
  for (StateId s : members)
    for (EdgeId e : g.out(s)) {
      const StateId t = g.edge(e).dst;
      if (states[t] && local[t] != -1) edges.emplace_back(e, weights[e]);
    }
  if (edges.empty()) return std::nullopt;

  const bool maximize = mode == ExtremeMode::Max;

  // Karp: D[k][v] = extreme total weight of a k-edge path from members[0].
  std::vector<std::vector<std::optional<Int>>> D(
      n + 1, std::vector<std::optional<Int>>(n));
  D[0][local[members[0]]] = Int(0);
  for (size_t k = 1; k <= n; ++k) {
    for (const auto& [e, w] : edges) {
      const int u = local[g.edge(e).src];
      const int v = local[g.edge(e).dst];
      if (!D[k - 1][u]) continue;
      Int cand = *D[k - 1][u] + w;
      if (!D[k][v] || (maximize ? cand > *D[k][v] : cand < *D[k][v]))
        D[k][v] = std::move(cand);
    }
  }

  std::optional<Rational> best;
  for (size_t v = 0; v < n; ++v) {
    if (!D[n][v]) continue;
    std::optional<Rational> inner;  // min over k for Max, max over k for Min
    for (size_t k = 0; k < n; ++k) {
      if (!D[k][v]) continue;
      Rational r = make_rational(*D[n][v] - *D[k][v], Int(n - k));
      if (!inner || (maximize ? r < *inner : r > *inner)) inner = r;
    }
    if (!inner) continue;
    if (!best || (maximize ? *inner > *best : *inner < *best)) best = inner;
  }
  if (!best) throw ValidationError("extreme_cycle_in_scc: no cycle found");
  const Rational mu = *best;

  // Witness: with reduced weights (mu - w) for Max or (w - mu) for Min,
  // every cycle has nonnegative total, extreme cycles total zero and are
  // all-tight under shortest-path distances; any cycle of tight edges has
  // mean exactly mu.
  auto reduced = [&](const Int& w) -> Rational {
    return maximize ? mu - Rational(w) : Rational(w) - mu;
  };
  std::vector<std::optional<Rational>> dist(n);
  dist[local[members[0]]] = Rational(0);
  for (size_t it = 0; it < n; ++it) {
    bool changed = false;
    for (const auto& [e, w] : edges) {
      const int u = local[g.edge(e).src];
      const int v = local[g.edge(e).dst];
      if (!dist[u]) continue;
      Rational cand = *dist[u] + reduced(w);
      if (!dist[v] || cand < *dist[v]) {
        dist[v] = std::move(cand);
        changed = true;
      }
    }
    if (!changed) break;
  }

  // DFS over tight edges only; a gray-target edge closes a witness cycle.
  std::vector<std::vector<std::pair<EdgeId, int>>> tight(n);
  for (const auto& [e, w] : edges) {
    const int u = local[g.edge(e).src];
    const int v = local[g.edge(e).dst];
    if (dist[u] && dist[v] && *dist[u] + reduced(w) == *dist[v])
      tight[u].emplace_back(e, v);
  }
  std::vector<int> color(n, 0);  // 0 white, 1 gray, 2 black
  std::vector<EdgeId> cycle;
  struct DfsFrame {
    int node;
    size_t pos;
    EdgeId in_edge;  // edge used to enter `node`; unused at depth 0
  };
  std::vector<DfsFrame> stack;
  for (size_t root = 0; root < n && cycle.empty(); ++root) {
    if (color[root] != 0) continue;
    stack.push_back({static_cast<int>(root), 0, 0});
    color[root] = 1;
    while (!stack.empty() && cycle.empty()) {
      DfsFrame& f = stack.back();
      if (f.pos < tight[f.node].size()) {
        auto [e, v] = tight[f.node][f.pos++];
        if (color[v] == 1) {
          size_t j = stack.size();
          while (j > 0 && stack[j - 1].node != v) --j;
          for (size_t i = j; i < stack.size(); ++i)
            cycle.push_back(stack[i].in_edge);
          cycle.push_back(e);
        } else if (color[v] == 0) {
          color[v] = 1;
          stack.push_back({v, 0, e});
        }
      } else {
        color[f.node] = 2;
        stack.pop_back();
      }
    }
    stack.clear();
  }
  if (cycle.empty())
    throw ValidationError("extreme_cycle_in_scc: tight subgraph has no cycle");

  CycleCandidate cand;
  cand.cycle = cycle;
  Int total(0);
  const size_t d = g.dimension();
  std::vector<Int> vec_total(d, Int(0));
  for (EdgeId e : cycle) {
    total += weights[e];
    for (size_t i = 0; i < d; ++i) vec_total[i] += g.edge(e).reward[i];
  }
  cand.scalar_mean = make_rational(total, Int(cycle.size()));
  assert(cand.scalar_mean == mu);
  cand.vec_mean.resize(d);
  for (size_t i = 0; i < d; ++i)
    cand.vec_mean[i] = make_rational(vec_total[i], Int(cycle.size()));
  return cand;
}

}  // namespace detail

namespace {

std::vector<bool> reachable_from(const GameGraph& g, StateId from) {
  std::vector<bool> seen(g.num_states(), false);
  std::deque<StateId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out(s)) {
      StateId t = g.edge(e).dst;
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

OnePlayerExtremes one_player_lex_extreme_masked(const GameGraph& g,
                                                ExtremeMode mode,
                                                const std::vector<bool>& states) {
  using namespace detail;
  const bool maximize = mode == ExtremeMode::Max;
  ScalarizedGame sg = scalarize(g);

  SccResult sccs = strongly_connected_components(g, states);
  std::vector<std::vector<StateId>> members(sccs.count);
  for (StateId s = 0; s < g.num_states(); ++s)
    if (sccs.comp[s] >= 0) members[sccs.comp[s]].push_back(s);

  OnePlayerExtremes res;
  std::vector<int> comp_best(sccs.count, -1);
  auto better = [&](const CycleCandidate& a, const CycleCandidate& b) {
    return maximize ? a.scalar_mean > b.scalar_mean : a.scalar_mean < b.scalar_mean;
  };

  // Components come out of Tarjan in reverse topological order, so a
  // component's successors are already settled when it is processed.
  for (int c = 0; c < sccs.count; ++c) {
    std::optional<CycleCandidate> own =
        extreme_cycle_in_scc(g, sg.weights, mode, members[c], states);
    int best = -1;
    if (own) {
      res.candidates.push_back(std::move(*own));
      best = static_cast<int>(res.candidates.size() - 1);
    }
    for (StateId s : members[c])
      for (EdgeId e : g.out(s)) {
        const StateId t = g.edge(e).dst;
        if (!states[t]) continue;
        const int tc = sccs.comp[t];
        if (tc == c || comp_best[tc] == -1) continue;
        if (best == -1 || better(res.candidates[comp_best[tc]], res.candidates[best]))
          best = comp_best[tc];
      }
    comp_best[c] = best;
  }

  res.best.assign(g.num_states(), 0);
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (!states[s]) continue;
    const int b = comp_best[sccs.comp[s]];
    if (b == -1)
      throw ValidationError("one_player_lex_extreme: no cycle reachable from " +
                            g.name(s));
    res.best[s] = static_cast<std::uint32_t>(b);
  }
  return res;
}

OnePlayerExtremes one_player_lex_extreme(const GameGraph& g, ExtremeMode mode) {
  return one_player_lex_extreme_masked(g, mode,
                                       std::vector<bool>(g.num_states(), true));
}

MeanCycleWitness extreme_mean_cycle(const GameGraph& g,
                                    std::span<const Int> weights,
                                    ExtremeMode mode) {
  using namespace detail;
  g.validate();
  std::vector<bool> reach = reachable_from(g, g.initial());
  SccResult sccs = strongly_connected_components(g, reach);
  std::vector<std::vector<StateId>> members(sccs.count);
  for (StateId s = 0; s < g.num_states(); ++s)
    if (sccs.comp[s] >= 0) members[sccs.comp[s]].push_back(s);

  std::optional<CycleCandidate> best;
  const bool maximize = mode == ExtremeMode::Max;
  for (int c = 0; c < sccs.count; ++c) {
    auto cand = extreme_cycle_in_scc(g, weights, mode, members[c], reach);
    if (!cand) continue;
    if (!best || (maximize ? cand->scalar_mean > best->scalar_mean
                           : cand->scalar_mean < best->scalar_mean))
      best = std::move(cand);
  }
  if (!best)
    throw ValidationError("extreme_mean_cycle: reachable subgraph is acyclic");

  MeanCycleWitness w;
  w.mean = best->scalar_mean;
  std::vector<bool> on_cycle(g.num_states(), false);
  for (EdgeId e : best->cycle) on_cycle[g.edge(e).src] = true;
  auto prefix = bfs_path(g, g.initial(), on_cycle, reach);
  assert(prefix.has_value());
  StateId entry = g.initial();
  for (EdgeId e : *prefix) entry = g.edge(e).dst;
  w.lasso.start = g.initial();
  w.lasso.prefix = std::move(*prefix);
  w.lasso.cycle = rotate_cycle(g, best->cycle, entry);
  validate_lasso(g, w.lasso);
  return w;
}

}  // namespace lexsynt
