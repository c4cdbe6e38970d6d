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

#include "lexsynt/mealy.hpp"

#include <deque>
#include <map>

#include "lexsynt/parity.hpp"
#include "lexsynt/scalarize.hpp"
#include "lexsynt/single_player.hpp"

namespace lexsynt {

MealyMachine::MealyMachine(std::vector<std::string> inputs,
                           std::vector<std::string> outputs)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      in_alpha_(inputs_),
      out_alpha_(outputs_) {}

StateId MealyMachine::add_state(std::string name) {
  names_.push_back(std::move(name));
  trans_.emplace_back(in_alpha_.letter_count());
  return static_cast<StateId>(names_.size() - 1);
}

void MealyMachine::set_transition(StateId src, Letter in, Letter out,
                                  StateId dst) {
  if (src >= names_.size() || dst >= names_.size())
    throw ValidationError("transition endpoint out of range");
  auto& slot = trans_[src][in.bits];
  if (slot)
    throw ValidationError("duplicate input letter " +
                          format_letter(in_alpha_, in) + " on state " +
                          names_[src]);
  slot = Tr{out, dst};
}

void MealyMachine::validate() const {
  if (names_.empty()) throw ValidationError("machine has no states");
  for (StateId s = 0; s < names_.size(); ++s)
    for (std::uint32_t b = 0; b < in_alpha_.letter_count(); ++b)
      if (!trans_[s][b])
        throw ValidationError("incomplete at state " + names_[s] + ": " +
                              format_letter(in_alpha_, Letter{b}));
}

const MealyMachine::Tr& MealyMachine::transition(StateId s, Letter in) const {
  const auto& slot = trans_[s][in.bits];
  if (!slot)
    throw ValidationError("incomplete at state " + names_[s] + ": " +
                          format_letter(in_alpha_, in));
  return *slot;
}

Word MealyMachine::io_word(const Word& input) const {
  validate();
  if (input.cycle.empty()) throw ValidationError("word has an empty cycle");
  const unsigned shift = static_cast<unsigned>(inputs_.size());
  auto joint = [&](Letter in, Letter out) {
    return Letter{in.bits | (out.bits << shift)};
  };

  Word io;
  StateId at = initial_;
  for (Letter l : input.prefix) {
    const Tr& t = transition(at, l);
    io.prefix.push_back(joint(l, t.out));
    at = t.dst;
  }
  std::map<std::pair<StateId, size_t>, size_t> seen;
  std::vector<Letter> emitted;
  size_t pos = 0;
  while (true) {
    auto key = std::make_pair(at, pos);
    auto it = seen.find(key);
    if (it != seen.end()) {
      io.prefix.insert(io.prefix.end(), emitted.begin(),
                       emitted.begin() + static_cast<long>(it->second));
      io.cycle.assign(emitted.begin() + static_cast<long>(it->second),
                      emitted.end());
      return io;
    }
    seen.emplace(key, emitted.size());
    const Tr& t = transition(at, input.cycle[pos]);
    emitted.push_back(joint(input.cycle[pos], t.out));
    at = t.dst;
    pos = (pos + 1) % input.cycle.size();
  }
}

GameGraph spec_product(const QuantAutomaton& a, const MealyMachine& m) {
  a.validate();
  m.validate();
  if (a.inputs() != m.inputs() || a.outputs() != m.outputs())
    throw ValidationError("spec_product: alphabet mismatch");
  const unsigned shift = static_cast<unsigned>(a.inputs().size());
  const std::uint32_t in_letters = m.input_alphabet().letter_count();

  GameGraph g;
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto intern = [&](StateId sa, StateId sm) {
    auto key = std::make_pair(sa, sm);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    StateId id = g.add_state(a.name(sa) + "." + m.name(sm), Player::P2,
                             a.priority(sa));
    ids.emplace(key, id);
    queue.emplace_back(sa, sm);
    return id;
  };
  intern(a.initial(), m.initial());
  while (!queue.empty()) {
    auto [sa, sm] = queue.front();
    queue.pop_front();
    const StateId src = ids.at({sa, sm});
    for (std::uint32_t i = 0; i < in_letters; ++i) {
      const MealyMachine::Tr& t = m.transition(sm, Letter{i});
      const Letter joint{i | (t.out.bits << shift)};
      const auto& arrow = a.arrow(sa, joint);
      g.add_edge(src, intern(arrow.dst, t.dst), arrow.reward, Letter{i});
    }
  }
  g.set_initial(0);
  g.set_alphabet(m.input_alphabet());
  g.validate();
  return g;
}

VerifyResult verify_value(const QuantAutomaton& a, const MealyMachine& m) {
  VerifyResult res;
  res.product = spec_product(a, m);
  const GameGraph& prod = res.product;
  const StateId init = prod.initial();

  if (a.parity()) {
    std::vector<bool> bad = odd_cycle_reachable(prod);
    if (bad[init]) {
      res.value = LexValue::bottom();
      auto witness = odd_lasso_exists(prod);
      if (!witness)
        throw ValidationError("verify_value: missing odd witness (internal)");
      res.witness = std::move(*witness);
      return res;
    }
    std::vector<bool> good(prod.num_states());
    for (StateId s = 0; s < prod.num_states(); ++s) good[s] = !bad[s];
    OnePlayerExtremes ext =
        one_player_lex_extreme_masked(prod, ExtremeMode::Min, good);
    const CycleCandidate& cand = ext.candidates[ext.best[init]];
    res.value = LexValue::vec(cand.vec_mean);
    std::vector<bool> on_cycle(prod.num_states(), false);
    for (EdgeId e : cand.cycle) on_cycle[prod.edge(e).src] = true;
    auto prefix = detail::bfs_path(prod, init, on_cycle, good);
    if (!prefix)
      throw ValidationError("verify_value: witness unreachable (internal)");
    StateId entry = init;
    for (EdgeId e : *prefix) entry = prod.edge(e).dst;
    res.witness.start = init;
    res.witness.prefix = std::move(*prefix);
    res.witness.cycle = detail::rotate_cycle(prod, cand.cycle, entry);
    validate_lasso(prod, res.witness);
    return res;
  }

  ScalarizedGame sg = scalarize(prod);
  MeanCycleWitness w = extreme_mean_cycle(prod, sg.weights, ExtremeMode::Min);
  res.witness = w.lasso;
  res.value = LexValue::vec(lasso_mean(prod, res.witness));
  return res;
}

}  // namespace lexsynt
