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

#include "lexsynt/synth.hpp"

#include <deque>
#include <map>

namespace lexsynt {

Letter SplitGame::edge_output(EdgeId e) const {
  const auto& label = graph.edge(e).label;
  if (!label) throw ValidationError("edge has no label");
  return Letter{label->bits >> in_count};
}

SplitGame split_to_game(const QuantAutomaton& a) {
  a.validate();
  if (a.inputs().empty() || a.outputs().empty())
    throw ValidationError("split_to_game: inputs and outputs must be nonempty");

  SplitGame sg;
  sg.inputs = a.inputs();
  sg.outputs = a.outputs();
  sg.in_count = static_cast<unsigned>(a.inputs().size());
  const std::uint32_t in_letters = 1u << sg.in_count;
  const std::uint32_t out_letters =
      1u << static_cast<unsigned>(a.outputs().size());
  const size_t d = a.dim();
  const std::optional<int> inter_prio =
      a.parity() ? std::optional<int>(a.to_game().max_priority()) : std::nullopt;

  GameGraph& g = sg.graph;
  sg.env_of.resize(a.num_states());
  for (StateId s = 0; s < a.num_states(); ++s)
    sg.env_of[s] = g.add_state(a.name(s), Player::P2, a.priority(s));
  sg.auto_of.assign(a.num_states(), std::nullopt);
  for (StateId s = 0; s < a.num_states(); ++s) sg.auto_of[sg.env_of[s]] = s;

  const RewardVec zero(d, Int(0));
  sg.inter_of.assign(a.num_states(), std::vector<StateId>(in_letters));
  for (StateId s = 0; s < a.num_states(); ++s) {
    // group input letters by their output behavior
    using Key = std::vector<std::pair<StateId, RewardVec>>;
    std::map<Key, StateId> groups;
    for (std::uint32_t i = 0; i < in_letters; ++i) {
      Key key;
      key.reserve(out_letters);
      for (std::uint32_t o = 0; o < out_letters; ++o) {
        const auto& arrow = a.arrow(s, Letter{i | (o << sg.in_count)});
        key.emplace_back(arrow.dst, arrow.reward);
      }
      auto it = groups.find(key);
      StateId inter;
      if (it != groups.end()) {
        inter = it->second;
      } else {
        inter = g.add_state(a.name(s) + "@" + std::to_string(groups.size()),
                            Player::P1, inter_prio);
        groups.emplace(key, inter);
        for (std::uint32_t o = 0; o < out_letters; ++o) {
          RewardVec doubled(d);
          for (size_t c = 0; c < d; ++c) doubled[c] = key[o].second[c] * 2;
          g.add_edge(inter, sg.env_of[key[o].first], std::move(doubled),
                     Letter{o << sg.in_count});
        }
      }
      sg.inter_of[s][i] = inter;
      g.add_edge(sg.env_of[s], inter, zero, Letter{i});
    }
  }
  sg.auto_of.resize(g.num_states(), std::nullopt);
  g.set_initial(sg.env_of[a.initial()]);
  g.set_alphabet(a.alphabet());
  g.validate();
  return sg;
}

MealyMachine strategy_to_mealy(const SplitGame& sg,
                               const FiniteMemoryStrategy& s) {
  const GameGraph& g = sg.graph;
  validate_strategy(g, s, Player::P1);
  MealyMachine m(sg.inputs, sg.outputs);
  const std::uint32_t in_letters = 1u << sg.in_count;

  std::map<std::pair<StateId, std::uint32_t>, StateId> ids;
  std::deque<std::pair<StateId, std::uint32_t>> queue;
  auto intern = [&](StateId env, std::uint32_t mem) {
    auto key = std::make_pair(env, mem);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    StateId id = m.add_state("q" + std::to_string(ids.size()));
    ids.emplace(key, id);
    queue.emplace_back(env, mem);
    return id;
  };
  intern(g.initial(), s.initial_memory);
  m.set_initial(0);
  while (!queue.empty()) {
    auto [env, mem] = queue.front();
    queue.pop_front();
    const StateId src = ids.at({env, mem});
    const StateId astate = *sg.auto_of[env];
    for (std::uint32_t i = 0; i < in_letters; ++i) {
      const StateId inter = sg.inter_of[astate][i];
      const std::uint32_t m1 = s.update[mem][inter];
      const EdgeId chosen = s.move_at(m1, inter);
      const StateId env2 = g.edge(chosen).dst;
      const std::uint32_t m2 = s.update[m1][env2];
      m.set_transition(src, Letter{i}, sg.edge_output(chosen),
                       intern(env2, m2));
    }
  }
  m.validate();
  return m;
}

SynthesisResult synthesize(const QuantAutomaton& a,
                           const std::optional<std::vector<Rational>>& eps,
                           const LmppOptions& opt) {
  SplitGame sg = split_to_game(a);
  if (!a.parity()) {
    LexMpSolution mp = lex_mp_solve(sg.graph, MpOptions{opt.deadline});
    SynthesisResult res{
        strategy_to_mealy(sg, FiniteMemoryStrategy::from_memoryless(
                                  mp.p1, sg.graph.num_states())),
        mp.values[sg.graph.initial()], true};
    return res;
  }

  CertifiedSolution sol = solve_lmpp(sg.graph, opt);
  if (!sol.certified)
    throw ResourceCapError("synthesize: memory cap exhausted before certification");
  if (auto mo = has_memoryless_optimal(sg.graph, sol, opt)) {
    return SynthesisResult{
        strategy_to_mealy(sg, FiniteMemoryStrategy::from_memoryless(
                                  *mo, sg.graph.num_states())),
        sol.values[sg.graph.initial()], true};
  }
  if (!eps)
    throw ValidationError(
        "synthesize: no memoryless optimum; an epsilon is required");
  FiniteMemoryStrategy s = epsilon_optimal_strategy(sg.graph, *eps, opt);
  return SynthesisResult{strategy_to_mealy(sg, s),
                         sol.values[sg.graph.initial()], false};
}

RealizabilityVerdict classify_realizability(
    const QuantAutomaton& a, const LexValue& cutoff,
    const std::optional<std::vector<Rational>>& eps, const LmppOptions& opt) {
  if (cutoff.is_bottom())
    throw ValidationError("classify_realizability: cutoff must be a vector");
  if (cutoff.dimension() != a.dim())
    throw ValidationError("classify_realizability: cutoff dimension mismatch");

  SplitGame sg = split_to_game(a);
  if (!a.parity()) {
    LexMpSolution mp = lex_mp_solve(sg.graph, MpOptions{opt.deadline});
    const LexValue v = mp.values[sg.graph.initial()];
    if (lex_leq(cutoff, v)) {
      MealyMachine m = strategy_to_mealy(
          sg, FiniteMemoryStrategy::from_memoryless(mp.p1,
                                                    sg.graph.num_states()));
      return RealizabilityVerdict{Verdict::Realizable, v, std::move(m)};
    }
    return RealizabilityVerdict{Verdict::Unrealizable, v, std::nullopt};
  }

  CertifiedSolution sol = solve_lmpp(sg.graph, opt);
  if (!sol.certified)
    throw ResourceCapError(
        "classify_realizability: memory cap exhausted before certification");
  const LexValue v = sol.values[sg.graph.initial()];
  switch (lex_compare(cutoff, v)) {
    case Ordering::Greater:
      return RealizabilityVerdict{Verdict::Unrealizable, v, std::nullopt};
    case Ordering::Less: {
      std::optional<MealyMachine> witness;
      if (auto s = strategy_achieving(sg.graph, cutoff, opt))
        witness = strategy_to_mealy(sg, *s);
      return RealizabilityVerdict{Verdict::Realizable, v, std::move(witness)};
    }
    case Ordering::Equal:
      break;
  }
  if (auto mo = has_memoryless_optimal(sg.graph, sol, opt)) {
    MealyMachine m = strategy_to_mealy(
        sg,
        FiniteMemoryStrategy::from_memoryless(*mo, sg.graph.num_states()));
    return RealizabilityVerdict{Verdict::Realizable, v, std::move(m)};
  }
  std::optional<MealyMachine> witness;
  if (eps) {
    FiniteMemoryStrategy s = epsilon_optimal_strategy(sg.graph, *eps, opt);
    witness = strategy_to_mealy(sg, s);
  }
  return RealizabilityVerdict{Verdict::LimitOnly, v, std::move(witness)};
}

}  // namespace lexsynt
