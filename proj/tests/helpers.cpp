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

#include "helpers.hpp"

#include <algorithm>
#include <map>

namespace testutil {

std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

QuantAutomaton load_qa(const std::string& name) {
  return parse_qa(read_file(fixture_path(name)));
}

GameGraph load_game(const std::string& name) {
  return parse_game(read_file(fixture_path(name)));
}

MealyMachine load_mealy(const std::string& name) {
  return parse_mealy(read_file(fixture_path(name)));
}

LexValue lv1(long n, long d) { return LexValue::vec({rat(n, d)}); }

LexValue lv2(Rational a, Rational b) {
  return LexValue::vec({std::move(a), std::move(b)});
}

GameGraph random_game(Rng& rng, const RandomGameSpec& spec) {
  const int n =
      spec.min_states + static_cast<int>(rng.below(static_cast<std::uint32_t>(
                            spec.max_states - spec.min_states + 1)));
  GameGraph g;
  for (int s = 0; s < n; ++s) {
    std::optional<int> prio;
    if (spec.priorities)
      prio = static_cast<int>(
          rng.below(static_cast<std::uint32_t>(spec.max_priority + 1)));
    g.add_state("s" + std::to_string(s),
                rng.below(2) == 0 ? Player::P1 : Player::P2, prio);
  }
  for (int s = 0; s < n; ++s) {
    const int deg = 1 + static_cast<int>(rng.below(
                            static_cast<std::uint32_t>(spec.max_out_degree)));
    for (int e = 0; e < deg; ++e) {
      RewardVec r;
      for (int c = 0; c < spec.dim; ++c)
        r.emplace_back(
            rng.below(static_cast<std::uint32_t>(spec.max_reward + 1)));
      g.add_edge(static_cast<StateId>(s),
                 static_cast<StateId>(rng.below(static_cast<std::uint32_t>(n))),
                 std::move(r));
    }
  }
  g.set_initial(0);
  g.validate();
  return g;
}

GameGraph with_uniform_priority(const GameGraph& g, int prio) {
  GameGraph r;
  for (StateId s = 0; s < g.num_states(); ++s)
    r.add_state(g.name(s), g.owner(s), prio);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    r.add_edge(ed.src, ed.dst, ed.reward, ed.label);
  }
  r.set_initial(g.initial());
  r.set_alphabet(g.alphabet());
  return r;
}

GameGraph without_priorities(const GameGraph& g) {
  GameGraph r;
  for (StateId s = 0; s < g.num_states(); ++s)
    r.add_state(g.name(s), g.owner(s), std::nullopt);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    r.add_edge(ed.src, ed.dst, ed.reward, ed.label);
  }
  r.set_initial(g.initial());
  r.set_alphabet(g.alphabet());
  return r;
}

namespace {

bool edges_match(const GameGraph& a, const GameGraph& b,
                 const std::vector<int>& map) {
  for (StateId s = 0; s < a.num_states(); ++s) {
    auto ae = a.out(s);
    auto be = b.out(static_cast<StateId>(map[s]));
    if (ae.size() != be.size()) return false;
    std::vector<bool> used(be.size(), false);
    for (EdgeId e : ae) {
      const Edge& ea = a.edge(e);
      bool found = false;
      for (size_t j = 0; j < be.size(); ++j) {
        if (used[j]) continue;
        const Edge& eb = b.edge(be[j]);
        if (static_cast<StateId>(map[ea.dst]) == eb.dst &&
            ea.reward == eb.reward && ea.label == eb.label) {
          used[j] = true;
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool extend(const GameGraph& a, const GameGraph& b, std::vector<int>& map,
            std::vector<bool>& taken, StateId next) {
  if (next == a.num_states()) return edges_match(a, b, map);
  for (StateId cand = 0; cand < b.num_states(); ++cand) {
    if (taken[cand]) continue;
    if (a.owner(next) != b.owner(cand)) continue;
    if (a.priority(next) != b.priority(cand)) continue;
    if (a.out(next).size() != b.out(cand).size()) continue;
    if ((next == a.initial()) != (cand == b.initial())) continue;
    map[next] = static_cast<int>(cand);
    taken[cand] = true;
    if (extend(a, b, map, taken, next + 1)) return true;
    taken[cand] = false;
    map[next] = -1;
  }
  return false;
}

}  // namespace

bool game_isomorphic(const GameGraph& a, const GameGraph& b) {
  if (a.num_states() != b.num_states() || a.num_edges() != b.num_edges())
    return false;
  std::vector<int> map(a.num_states(), -1);
  std::vector<bool> taken(b.num_states(), false);
  return extend(a, b, map, taken, 0);
}

bool qa_isomorphic(const QuantAutomaton& a, const QuantAutomaton& b) {
  if (a.num_states() != b.num_states() || a.dim() != b.dim() ||
      a.parity() != b.parity() || a.inputs() != b.inputs() ||
      a.outputs() != b.outputs())
    return false;
  const std::uint32_t letters = a.alphabet().letter_count();
  // canonical BFS order: complete determinism makes this unique
  auto canon = [&](const QuantAutomaton& x) {
    std::vector<int> order(x.num_states(), -1);
    std::vector<StateId> queue{x.initial()};
    order[x.initial()] = 0;
    int next = 1;
    for (size_t i = 0; i < queue.size(); ++i)
      for (std::uint32_t l = 0; l < letters; ++l) {
        StateId t = x.arrow(queue[i], Letter{l}).dst;
        if (order[t] == -1) {
          order[t] = next++;
          queue.push_back(t);
        }
      }
    return std::make_pair(order, next);
  };
  auto [oa, na] = canon(a);
  auto [ob, nb] = canon(b);
  if (na != nb) return false;  // differing reachable parts
  std::vector<StateId> inv_a(na), inv_b(nb);
  for (StateId s = 0; s < a.num_states(); ++s)
    if (oa[s] != -1) inv_a[oa[s]] = s;
  for (StateId s = 0; s < b.num_states(); ++s)
    if (ob[s] != -1) inv_b[ob[s]] = s;
  for (int i = 0; i < na; ++i) {
    StateId sa = inv_a[i], sb = inv_b[i];
    if (a.priority(sa) != b.priority(sb)) return false;
    for (std::uint32_t l = 0; l < letters; ++l) {
      const auto& xa = a.arrow(sa, Letter{l});
      const auto& xb = b.arrow(sb, Letter{l});
      if (oa[xa.dst] != ob[xb.dst] || xa.reward != xb.reward) return false;
    }
  }
  return true;
}

bool mealy_isomorphic(const MealyMachine& a, const MealyMachine& b) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) return false;
  const std::uint32_t letters = a.input_alphabet().letter_count();
  auto canon = [&](const MealyMachine& x) {
    std::vector<int> order(x.num_states(), -1);
    std::vector<StateId> queue{x.initial()};
    order[x.initial()] = 0;
    int next = 1;
    for (size_t i = 0; i < queue.size(); ++i)
      for (std::uint32_t l = 0; l < letters; ++l) {
        StateId t = x.transition(queue[i], Letter{l}).dst;
        if (order[t] == -1) {
          order[t] = next++;
          queue.push_back(t);
        }
      }
    return std::make_pair(order, next);
  };
  auto [oa, na] = canon(a);
  auto [ob, nb] = canon(b);
  if (na != nb) return false;
  std::vector<StateId> inv_a(na), inv_b(nb);
  for (StateId s = 0; s < a.num_states(); ++s)
    if (oa[s] != -1) inv_a[oa[s]] = s;
  for (StateId s = 0; s < b.num_states(); ++s)
    if (ob[s] != -1) inv_b[ob[s]] = s;
  for (int i = 0; i < na; ++i)
    for (std::uint32_t l = 0; l < letters; ++l) {
      const auto& ta = a.transition(inv_a[i], Letter{l});
      const auto& tb = b.transition(inv_b[i], Letter{l});
      if (ta.out != tb.out || oa[ta.dst] != ob[tb.dst]) return false;
    }
  return true;
}

Letter letter(const Alphabet& a, std::initializer_list<const char*> positives) {
  Letter l{0};
  for (const char* name : positives) {
    auto idx = a.index_of(name);
    if (!idx) throw ValidationError(std::string("unknown signal ") + name);
    l.bits |= 1u << *idx;
  }
  return l;
}

}  // namespace testutil
