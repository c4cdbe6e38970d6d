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

#include "lexsynt/graph.hpp"

#include <algorithm>
#include <set>

namespace lexsynt {

std::string format_letter(const Alphabet& a, Letter l) {
  std::string s = "{";
  for (unsigned i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    if (!l.test(i)) s += "-";
    s += a.signal(i);
  }
  return s + "}";
}

int GameGraph::max_priority() const {
  int m = 0;
  for (const auto& p : priorities_)
    if (p && *p > m) m = *p;
  return m;
}

void GameGraph::validate() const {
  if (names_.empty()) throw ValidationError("game graph has no states");
  if (initial_ >= names_.size())
    throw ValidationError("initial state out of range");
  const bool prio = priorities_[0].has_value();
  for (size_t s = 0; s < names_.size(); ++s) {
    if (out_[s].empty())
      throw ValidationError("state " + names_[s] + " has no outgoing edge");
    if (priorities_[s].has_value() != prio)
      throw ValidationError("priorities must be assigned to all states or none");
    if (priorities_[s] && *priorities_[s] < 0)
      throw ValidationError("negative priority at state " + names_[s]);
    std::set<Letter> seen;
    for (EdgeId e : out_[s]) {
      const Edge& ed = edges_[e];
      if (ed.dst >= names_.size())
        throw ValidationError("edge target out of range");
      if (ed.label) {
        if (!seen.insert(*ed.label).second)
          throw ValidationError("duplicate letter " +
                                format_letter(alphabet_, *ed.label) +
                                " on state " + names_[s]);
      }
    }
  }
  const size_t d = dimension();
  for (const Edge& e : edges_) {
    if (e.reward.size() != d)
      throw ValidationError("inconsistent reward dimension");
    for (const Int& r : e.reward)
      if (r < 0) throw ValidationError("negative reward");
  }
}

void validate_lasso(const GameGraph& g, const Lasso& l) {
  if (l.cycle.empty()) throw ValidationError("lasso has an empty cycle");
  StateId at = l.start;
  for (EdgeId e : l.prefix) {
    if (e >= g.num_edges() || g.edge(e).src != at)
      throw ValidationError("lasso prefix is not a path");
    at = g.edge(e).dst;
  }
  StateId cycle_start = at;
  for (EdgeId e : l.cycle) {
    if (e >= g.num_edges() || g.edge(e).src != at)
      throw ValidationError("lasso cycle is not a path");
    at = g.edge(e).dst;
  }
  if (at != cycle_start)
    throw ValidationError("lasso cycle does not return to its start");
}

std::vector<Rational> lasso_mean(const GameGraph& g, const Lasso& l) {
  validate_lasso(g, l);
  const size_t d = g.dimension();
  std::vector<Int> sum(d, Int(0));
  for (EdgeId e : l.cycle)
    for (size_t i = 0; i < d; ++i) sum[i] += g.edge(e).reward[i];
  std::vector<Rational> mean(d);
  const Int len(static_cast<unsigned>(l.cycle.size()));
  for (size_t i = 0; i < d; ++i) mean[i] = make_rational(sum[i], len);
  return mean;
}

CycleParity lasso_parity(const GameGraph& g, const Lasso& l) {
  validate_lasso(g, l);
  if (!g.has_priorities())
    throw ValidationError("lasso_parity on a graph without priorities");
  int min_p = *g.priority(g.edge(l.cycle[0]).src);
  for (EdgeId e : l.cycle)
    min_p = std::min(min_p, *g.priority(g.edge(e).src));
  return min_p % 2 == 0 ? CycleParity::Even : CycleParity::Odd;
}

LexValue lasso_mpp_payoff(const GameGraph& g, const Lasso& l) {
  if (lasso_parity(g, l) == CycleParity::Odd) return LexValue::bottom();
  return LexValue::vec(lasso_mean(g, l));
}

void validate_strategy(const GameGraph& g, const MemorylessStrategy& s, Player p) {
  if (s.moves.size() != g.num_states())
    throw ValidationError("strategy has wrong domain size");
  for (StateId st = 0; st < g.num_states(); ++st) {
    if (g.owner(st) != p) continue;
    if (!s.moves[st])
      throw ValidationError("strategy undefined at owned state " + g.name(st));
    const EdgeId e = *s.moves[st];
    if (e >= g.num_edges() || g.edge(e).src != st)
      throw ValidationError("strategy move is not an outgoing edge of " +
                            g.name(st));
  }
}

FiniteMemoryStrategy FiniteMemoryStrategy::from_memoryless(
    const MemorylessStrategy& m, size_t num_states) {
  FiniteMemoryStrategy s;
  s.memory_count = 1;
  s.initial_memory = 0;
  s.update.assign(1, std::vector<std::uint32_t>(num_states, 0));
  s.moves.assign(1, m.moves);
  s.moves[0].resize(num_states);
  return s;
}

void validate_strategy(const GameGraph& g, const FiniteMemoryStrategy& s, Player p) {
  if (s.memory_count == 0 || s.initial_memory >= s.memory_count)
    throw ValidationError("malformed strategy memory machine");
  if (s.update.size() != s.memory_count || s.moves.size() != s.memory_count)
    throw ValidationError("strategy tables have wrong memory dimension");
  for (std::uint32_t m = 0; m < s.memory_count; ++m) {
    if (s.update[m].size() != g.num_states() || s.moves[m].size() != g.num_states())
      throw ValidationError("strategy tables have wrong state dimension");
    for (StateId st = 0; st < g.num_states(); ++st) {
      if (s.update[m][st] >= s.memory_count)
        throw ValidationError("memory update out of range");
      if (g.owner(st) == p && s.moves[m][st]) {
        const EdgeId e = *s.moves[m][st];
        if (e >= g.num_edges() || g.edge(e).src != st)
          throw ValidationError("strategy move is not an outgoing edge");
      }
    }
  }
}

StrategyProduct strategy_product(const GameGraph& g,
                                 const FiniteMemoryStrategy& s, Player owner) {
  const size_t n = g.num_states();
  StrategyProduct prod;
  std::vector<std::optional<StateId>> id(n * s.memory_count);
  std::vector<std::pair<StateId, std::uint32_t>> worklist;
  auto intern = [&](StateId st, std::uint32_t m) {
    auto& slot = id[static_cast<size_t>(m) * n + st];
    if (!slot) {
      slot = prod.graph.add_state(g.name(st) + "#" + std::to_string(m),
                                  g.owner(st), g.priority(st));
      worklist.emplace_back(st, m);
    }
    return *slot;
  };
  prod.seed.resize(n);
  for (StateId st = 0; st < n; ++st)
    prod.seed[st] = intern(st, s.initial_memory);
  while (!worklist.empty()) {
    auto [st, m] = worklist.back();
    worklist.pop_back();
    const StateId from = *id[static_cast<size_t>(m) * n + st];
    auto link = [&](EdgeId e) {
      const Edge& ed = g.edge(e);
      const std::uint32_t m2 = s.update[m][ed.dst];
      prod.graph.add_edge(from, intern(ed.dst, m2), ed.reward);
    };
    if (g.owner(st) == owner) {
      link(s.move_at(m, st));
    } else {
      for (EdgeId e : g.out(st)) link(e);
    }
  }
  prod.graph.set_initial(prod.seed[g.initial()]);
  prod.graph.validate();
  return prod;
}

GameGraph restrict_to_strategy(const GameGraph& g, const MemorylessStrategy& s,
                               Player owner) {
  validate_strategy(g, s, owner);
  GameGraph r;
  for (StateId st = 0; st < g.num_states(); ++st)
    r.add_state(g.name(st), g.owner(st), g.priority(st));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (g.owner(ed.src) == owner && *s.moves[ed.src] != e) continue;
    r.add_edge(ed.src, ed.dst, ed.reward, ed.label);
  }
  r.set_initial(g.initial());
  r.set_alphabet(g.alphabet());
  r.validate();
  return r;
}

Subgraph induced_subgraph(const GameGraph& g, const std::vector<bool>& keep) {
  Subgraph sub;
  sub.to_new.assign(g.num_states(), std::nullopt);
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (!keep[s]) continue;
    sub.to_new[s] = sub.graph.add_state(g.name(s), g.owner(s), g.priority(s));
    sub.to_old.push_back(s);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (keep[ed.src] && keep[ed.dst]) {
      sub.graph.add_edge(*sub.to_new[ed.src], *sub.to_new[ed.dst], ed.reward,
                         ed.label);
      sub.edge_to_old.push_back(e);
    }
  }
  if (keep[g.initial()])
    sub.graph.set_initial(*sub.to_new[g.initial()]);
  sub.graph.set_alphabet(g.alphabet());
  sub.graph.validate();
  return sub;
}

GameGraph swap_owners(const GameGraph& g) {
  GameGraph r;
  for (StateId s = 0; s < g.num_states(); ++s)
    r.add_state(g.name(s), opponent(g.owner(s)), g.priority(s));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    r.add_edge(ed.src, ed.dst, ed.reward, ed.label);
  }
  r.set_initial(g.initial());
  r.set_alphabet(g.alphabet());
  return r;
}

}  // namespace lexsynt
