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

#include "lexsynt/oracle.hpp"

#include <algorithm>
#include <deque>

namespace lexsynt::oracle {

namespace {

constexpr size_t kMaxStates = 12;
constexpr size_t kMaxProductStates = 160;
constexpr std::uint64_t kMaxPairs = 1u << 16;
constexpr std::uint64_t kMaxFamily = 1u << 18;
constexpr size_t kMaxCycles = 1u << 20;

std::vector<bool> reach_from(const GameGraph& g, StateId from) {
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

std::vector<bool> reach_from_masked(const GameGraph& g, StateId from,
                                    const std::vector<bool>& mask) {
  std::vector<bool> seen(g.num_states(), false);
  if (!mask[from]) return seen;
  std::deque<StateId> q{from};
  seen[from] = true;
  while (!q.empty()) {
    StateId s = q.front();
    q.pop_front();
    for (EdgeId e : g.out(s)) {
      StateId t = g.edge(e).dst;
      if (mask[t] && !seen[t]) {
        seen[t] = true;
        q.push_back(t);
      }
    }
  }
  return seen;
}

CycleInfo describe(const GameGraph& g, const std::vector<EdgeId>& edges) {
  CycleInfo c;
  c.edges = edges;
  const size_t d = g.dimension();
  std::vector<Int> total(d, Int(0));
  for (EdgeId e : edges) {
    for (size_t i = 0; i < d; ++i) total[i] += g.edge(e).reward[i];
    if (g.has_priorities()) {
      int p = *g.priority(g.edge(e).src);
      if (!c.min_priority || p < *c.min_priority) c.min_priority = p;
    }
  }
  c.mean.resize(d);
  for (size_t i = 0; i < d; ++i)
    c.mean[i] = make_rational(total[i], Int(edges.size()));
  return c;
}

// Every simple cycle exactly once: each is rooted at its lowest state id.
std::vector<CycleInfo> all_simple_cycles(const GameGraph& g) {
  std::vector<CycleInfo> cycles;
  const size_t n = g.num_states();
  std::vector<bool> on_path(n, false);
  std::vector<EdgeId> path;

  for (StateId root = 0; root < n; ++root) {
    struct Frame {
      StateId state;
      size_t pos;
    };
    std::vector<Frame> stack{{root, 0}};
    on_path[root] = true;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto edges = g.out(f.state);
      if (f.pos < edges.size()) {
        const EdgeId e = edges[f.pos++];
        const StateId t = g.edge(e).dst;
        if (t == root) {
          path.push_back(e);
          cycles.push_back(describe(g, path));
          if (cycles.size() > kMaxCycles)
            throw ResourceCapError("oracle: too many simple cycles");
          path.pop_back();
        } else if (t > root && !on_path[t]) {
          on_path[t] = true;
          path.push_back(e);
          stack.push_back({t, 0});
        }
      } else {
        on_path[f.state] = false;
        if (!path.empty()) path.pop_back();
        stack.pop_back();
      }
    }
  }
  return cycles;
}

// --- strategy families (memoryless and step-counter machines) ---

std::vector<StateId> owned_states(const GameGraph& g, Player p) {
  std::vector<StateId> v;
  for (StateId s = 0; s < g.num_states(); ++s)
    if (g.owner(s) == p) v.push_back(s);
  return v;
}

std::uint64_t family_count(const GameGraph& g, const std::vector<StateId>& owned,
                           std::uint32_t memory, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (StateId s : owned)
    for (std::uint32_t m = 0; m < memory; ++m) {
      c *= g.out(s).size();
      if (c > cap) return cap + 1;
    }
  return c;
}

// Enumerates step-counter machines with exactly `memory` clock values.
class CounterFamily {
 public:
  CounterFamily(const GameGraph& g, Player p, std::uint32_t memory)
      : g_(g), memory_(memory), owned_(owned_states(g, p)) {
    idx_.assign(owned_.size() * memory_, 0);
  }

  std::optional<FiniteMemoryStrategy> next() {
    if (done_) return std::nullopt;
    FiniteMemoryStrategy f;
    f.memory_count = memory_;
    f.initial_memory = 0;
    f.update.assign(memory_, std::vector<std::uint32_t>(g_.num_states()));
    for (std::uint32_t m = 0; m < memory_; ++m)
      for (StateId t = 0; t < g_.num_states(); ++t)
        f.update[m][t] = (m + 1) % memory_;
    f.moves.assign(memory_,
                   std::vector<std::optional<EdgeId>>(g_.num_states()));
    for (size_t i = 0; i < owned_.size(); ++i)
      for (std::uint32_t m = 0; m < memory_; ++m)
        f.moves[m][owned_[i]] = g_.out(owned_[i])[idx_[i * memory_ + m]];
    size_t j = 0;
    for (; j < idx_.size(); ++j) {
      if (++idx_[j] < g_.out(owned_[j / memory_]).size()) break;
      idx_[j] = 0;
    }
    if (j == idx_.size()) done_ = true;
    return f;
  }

 private:
  const GameGraph& g_;
  std::uint32_t memory_;
  std::vector<StateId> owned_;
  std::vector<size_t> idx_;
  bool done_ = false;
};

// Exact best response of the minimizer on a one-player graph: Bottom if an
// odd-minimal-priority simple cycle is reachable, else the minimal
// lexicographic cycle mean among reachable cycles.
LexValue min_response(const GameGraph& g, const std::vector<CycleInfo>& cycles,
                      const std::vector<bool>& reach) {
  std::optional<LexValue> best;
  for (const CycleInfo& c : cycles) {
    if (!reach[g.edge(c.edges[0]).src]) continue;
    if (g.has_priorities() && *c.min_priority % 2 != 0)
      return LexValue::bottom();
    LexValue v = LexValue::vec(c.mean);
    if (!best || lex_less(v, *best)) best = std::move(v);
  }
  return best ? *best : LexValue::bottom();
}

// Exact best response of the maximizer: the best cycle mean achievable
// while satisfying parity, i.e. over cycles C that share a
// priority->=q-connected tour with some even-priority-q state, q <= min
// priority of C.  Without priorities, simply the best reachable cycle mean.
LexValue max_response(const GameGraph& g, const std::vector<CycleInfo>& cycles,
                      const std::vector<bool>& reach) {
  std::optional<LexValue> best;
  if (!g.has_priorities()) {
    for (const CycleInfo& c : cycles) {
      if (!reach[g.edge(c.edges[0]).src]) continue;
      LexValue v = LexValue::vec(c.mean);
      if (!best || lex_less(*best, v)) best = std::move(v);
    }
    return best ? *best : LexValue::bottom();
  }
  const size_t n = g.num_states();
  const int maxp = g.max_priority();
  for (int q = 0; q <= maxp; q += 2) {
    std::vector<bool> mask(n, false);
    for (StateId s = 0; s < n; ++s)
      if (*g.priority(s) >= q) mask[s] = true;
    // forward reach inside the mask, per anchor of priority exactly q
    for (StateId x = 0; x < n; ++x) {
      if (*g.priority(x) != q) continue;
      std::vector<bool> from_x = reach_from_masked(g, x, mask);
      for (const CycleInfo& c : cycles) {
        if (*c.min_priority < q) continue;
        const StateId cs = g.edge(c.edges[0]).src;
        if (!reach[cs] || !from_x[cs]) continue;
        // x must also be reachable from the cycle inside the mask
        if (!reach_from_masked(g, cs, mask)[x]) continue;
        LexValue v = LexValue::vec(c.mean);
        if (!best || lex_less(*best, v)) best = std::move(v);
      }
    }
  }
  return best ? *best : LexValue::bottom();
}

}  // namespace

std::vector<CycleInfo> enumerate_cycles(const GameGraph& g) {
  g.validate();
  if (g.num_states() > kMaxStates)
    throw ResourceCapError("oracle: instance larger than " +
                           std::to_string(kMaxStates) + " states");
  std::vector<bool> reach = reach_from(g, g.initial());
  std::vector<CycleInfo> out;
  for (CycleInfo& c : all_simple_cycles(g))
    if (reach[g.edge(c.edges[0]).src]) out.push_back(std::move(c));
  return out;
}

std::vector<LexValue> enumerate_memoryless_game_value(const GameGraph& g) {
  g.validate();
  if (g.has_priorities())
    throw ValidationError("enumerate_memoryless_game_value: no priorities allowed");
  const size_t n = g.num_states();
  const auto p1 = owned_states(g, Player::P1);
  const auto p2 = owned_states(g, Player::P2);
  const std::uint64_t pairs =
      family_count(g, p1, 1, kMaxPairs) * family_count(g, p2, 1, kMaxPairs);
  if (pairs > kMaxPairs)
    throw ResourceCapError("oracle: too many strategy pairs");
  const size_t d = g.dimension();

  // induced lasso mean from every state for a fixed successor map
  auto lasso_means = [&](const std::vector<EdgeId>& succ) {
    std::vector<std::optional<LexValue>> val(n);
    for (StateId s0 = 0; s0 < n; ++s0) {
      if (val[s0]) continue;
      std::vector<StateId> path;
      std::vector<int> mark(n, 0);
      StateId at = s0;
      while (!val[at] && !mark[at]) {
        mark[at] = 1;
        path.push_back(at);
        at = g.edge(succ[at]).dst;
      }
      LexValue v;
      if (val[at]) {
        v = *val[at];
      } else {
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
        v = LexValue::vec(std::move(mean));
      }
      for (StateId s : path) val[s] = v;
    }
    std::vector<LexValue> out(n);
    for (StateId s = 0; s < n; ++s) out[s] = *val[s];
    return out;
  };

  std::vector<std::optional<LexValue>> value(n);
  std::vector<size_t> i1(p1.size(), 0);
  std::vector<EdgeId> succ(n);
  while (true) {
    // min over Player-2 choices for this Player-1 strategy
    std::vector<std::optional<LexValue>> guarantee(n);
    std::vector<size_t> i2(p2.size(), 0);
    while (true) {
      for (StateId s = 0; s < n; ++s) succ[s] = g.out(s)[0];
      for (size_t i = 0; i < p1.size(); ++i) succ[p1[i]] = g.out(p1[i])[i1[i]];
      for (size_t i = 0; i < p2.size(); ++i) succ[p2[i]] = g.out(p2[i])[i2[i]];
      std::vector<LexValue> means = lasso_means(succ);
      for (StateId s = 0; s < n; ++s)
        if (!guarantee[s] || lex_less(means[s], *guarantee[s]))
          guarantee[s] = means[s];
      size_t j = 0;
      for (; j < p2.size(); ++j) {
        if (++i2[j] < g.out(p2[j]).size()) break;
        i2[j] = 0;
      }
      if (j == p2.size()) break;
    }
    for (StateId s = 0; s < n; ++s)
      if (!value[s] || lex_less(*value[s], *guarantee[s]))
        value[s] = *guarantee[s];
    size_t j = 0;
    for (; j < p1.size(); ++j) {
      if (++i1[j] < g.out(p1[j]).size()) break;
      i1[j] = 0;
    }
    if (j == p1.size()) break;
  }
  std::vector<LexValue> out(n);
  for (StateId s = 0; s < n; ++s) out[s] = *value[s];
  return out;
}

MemoryBounds bounded_memory_bounds(const GameGraph& g, int m) {
  g.validate();
  if (!g.has_priorities())
    throw ValidationError("bounded_memory_bounds: priorities required");
  if (g.num_states() > kMaxStates)
    throw ResourceCapError("oracle: instance larger than " +
                           std::to_string(kMaxStates) + " states");
  if (m < 1) throw ValidationError("bounded_memory_bounds: m must be >= 1");
  const size_t n = g.num_states();

  auto run_side = [&](Player p, bool lower_side) {
    std::vector<std::optional<LexValue>> bound(n);
    for (std::uint32_t mem = 1; mem <= static_cast<std::uint32_t>(m); ++mem) {
      if (family_count(g, owned_states(g, p), mem, kMaxFamily) > kMaxFamily)
        throw ResourceCapError("oracle: strategy family too large");
      CounterFamily fam(g, p, mem);
      while (auto s = fam.next()) {
        StrategyProduct prod = strategy_product(g, *s, p);
        if (prod.graph.num_states() > kMaxProductStates)
          throw ResourceCapError("oracle: strategy product too large");
        std::vector<CycleInfo> cycles = all_simple_cycles(prod.graph);
        for (StateId st = 0; st < n; ++st) {
          std::vector<bool> reach = reach_from(prod.graph, prod.seed[st]);
          LexValue v = lower_side ? min_response(prod.graph, cycles, reach)
                                    : max_response(prod.graph, cycles, reach);
          if (!bound[st] ||
              (lower_side ? lex_less(*bound[st], v) : lex_less(v, *bound[st])))
            bound[st] = std::move(v);
        }
      }
    }
    std::vector<LexValue> out(n);
    for (StateId s = 0; s < n; ++s) out[s] = *bound[s];
    return out;
  };

  MemoryBounds b;
  b.lower = run_side(Player::P1, true);
  b.upper = run_side(Player::P2, false);
  return b;
}

}  // namespace lexsynt::oracle
