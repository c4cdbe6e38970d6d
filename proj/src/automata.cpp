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

#include "lexsynt/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lexsynt {

namespace {

std::vector<std::string> join_signals(const std::vector<std::string>& in,
                                      const std::vector<std::string>& out) {
  std::vector<std::string> all = in;
  all.insert(all.end(), out.begin(), out.end());
  return all;
}

}  // namespace

QuantAutomaton::QuantAutomaton(std::vector<std::string> inputs,
                               std::vector<std::string> outputs, size_t dim,
                               bool parity)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      alphabet_(join_signals(inputs_, outputs_)),
      dim_(dim),
      parity_(parity) {}

StateId QuantAutomaton::add_state(std::string name, std::optional<int> priority) {
  if (parity_ && !priority)
    throw ValidationError("state " + name + " needs a priority (parity on)");
  if (!parity_ && priority)
    throw ValidationError("state " + name + " has a priority (parity off)");
  names_.push_back(std::move(name));
  priorities_.push_back(priority);
  trans_.emplace_back(alphabet_.letter_count());
  return static_cast<StateId>(names_.size() - 1);
}

void QuantAutomaton::set_arrow(StateId src, Letter l, StateId dst,
                               RewardVec reward) {
  if (src >= names_.size() || dst >= names_.size())
    throw ValidationError("arrow endpoint out of range");
  if (reward.size() != dim_)
    throw ValidationError("reward dimension mismatch at state " + names_[src]);
  for (const Int& r : reward)
    if (r < 0) throw ValidationError("negative reward");
  auto& slot = trans_[src][l.bits];
  if (slot)
    throw ValidationError("duplicate letter " + format_letter(alphabet_, l) +
                          " on state " + names_[src]);
  slot = Arrow{dst, std::move(reward)};
}

void QuantAutomaton::validate() const {
  if (names_.empty()) throw ValidationError("automaton has no states");
  for (StateId s = 0; s < names_.size(); ++s)
    for (std::uint32_t b = 0; b < alphabet_.letter_count(); ++b)
      if (!trans_[s][b])
        throw ValidationError("incomplete at state " + names_[s] + ": " +
                              format_letter(alphabet_, Letter{b}));
}

const QuantAutomaton::Arrow& QuantAutomaton::arrow(StateId s, Letter l) const {
  const auto& slot = trans_[s][l.bits];
  if (!slot)
    throw ValidationError("incomplete at state " + names_[s] + ": " +
                          format_letter(alphabet_, l));
  return *slot;
}

GameGraph QuantAutomaton::to_game() const {
  validate();
  GameGraph g;
  for (StateId s = 0; s < names_.size(); ++s)
    g.add_state(names_[s], Player::P1, priorities_[s]);
  for (StateId s = 0; s < names_.size(); ++s)
    for (std::uint32_t b = 0; b < alphabet_.letter_count(); ++b) {
      const Arrow& a = *trans_[s][b];
      g.add_edge(s, a.dst, a.reward, Letter{b});
    }
  g.set_initial(initial_);
  g.set_alphabet(alphabet_);
  g.validate();
  return g;
}

LexValue eval_word(const QuantAutomaton& a, const Word& w) {
  a.validate();
  if (w.cycle.empty()) throw ValidationError("word has an empty cycle");

  StateId at = a.initial();
  for (Letter l : w.prefix) at = a.arrow(at, l).dst;

  // iterate the cycle until (state, cycle position) repeats
  std::map<std::pair<StateId, size_t>, size_t> seen;
  std::vector<std::pair<StateId, size_t>> steps;  // (state, cycle pos) per step
  size_t pos = 0;
  size_t first;
  while (true) {
    auto key = std::make_pair(at, pos);
    auto it = seen.find(key);
    if (it != seen.end()) {
      first = it->second;
      break;
    }
    seen.emplace(key, steps.size());
    steps.push_back(key);
    at = a.arrow(at, w.cycle[pos]).dst;
    pos = (pos + 1) % w.cycle.size();
  }

  const size_t len = steps.size() - first;
  std::vector<Int> total(a.dim(), Int(0));
  std::optional<int> min_p;
  for (size_t i = first; i < steps.size(); ++i) {
    auto [s, p] = steps[i];
    const auto& arrow = a.arrow(s, w.cycle[p]);
    for (size_t c = 0; c < a.dim(); ++c) total[c] += arrow.reward[c];
    if (a.parity()) {
      const int sp = *a.priority(s);
      if (!min_p || sp < *min_p) min_p = sp;
    }
  }
  if (a.parity() && *min_p % 2 != 0) return LexValue::bottom();
  std::vector<Rational> mean(a.dim());
  for (size_t c = 0; c < a.dim(); ++c)
    mean[c] = make_rational(total[c], Int(len));
  return LexValue::vec(std::move(mean));
}

bool is_safety(const QuantAutomaton& a) {
  a.validate();
  if (a.parity() || a.dim() != 1) return false;
  const std::uint32_t letters = a.alphabet().letter_count();
  for (StateId s = 0; s < a.num_states(); ++s)
    for (std::uint32_t b = 0; b < letters; ++b) {
      const Int& r = a.arrow(s, Letter{b}).reward[0];
      if (r != 0 && r != 1) return false;
    }
  // heads of reward-0 edges must not reach any reward-1 edge
  std::vector<bool> tainted(a.num_states(), false);
  std::deque<StateId> queue;
  for (StateId s = 0; s < a.num_states(); ++s)
    for (std::uint32_t b = 0; b < letters; ++b) {
      const auto& arrow = a.arrow(s, Letter{b});
      if (arrow.reward[0] == 0 && !tainted[arrow.dst]) {
        tainted[arrow.dst] = true;
        queue.push_back(arrow.dst);
      }
    }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (std::uint32_t b = 0; b < letters; ++b) {
      const auto& arrow = a.arrow(s, Letter{b});
      if (arrow.reward[0] == 1) return false;
      if (!tainted[arrow.dst]) {
        tainted[arrow.dst] = true;
        queue.push_back(arrow.dst);
      }
    }
  }
  return true;
}

namespace {

void check_same_alphabet(const QuantAutomaton& a, const QuantAutomaton& b,
                         const char* what) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs())
    throw ValidationError(std::string(what) + ": alphabet mismatch");
}

// Reachable synchronized product; rewards and priorities via callbacks.
template <typename RewardFn, typename PrioFn>
QuantAutomaton product(const QuantAutomaton& a, const QuantAutomaton& b,
                       size_t dim, bool parity, RewardFn reward, PrioFn prio) {
  QuantAutomaton p(a.inputs(), a.outputs(), dim, parity);
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto intern = [&](StateId sa, StateId sb) {
    auto key = std::make_pair(sa, sb);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    StateId id = p.add_state(a.name(sa) + "." + b.name(sb), prio(sa, sb));
    ids.emplace(key, id);
    queue.emplace_back(sa, sb);
    return id;
  };
  intern(a.initial(), b.initial());
  p.set_initial(0);
  const std::uint32_t letters = a.alphabet().letter_count();
  while (!queue.empty()) {
    auto [sa, sb] = queue.front();
    queue.pop_front();
    const StateId src = ids.at({sa, sb});
    for (std::uint32_t l = 0; l < letters; ++l) {
      const auto& aa = a.arrow(sa, Letter{l});
      const auto& ab = b.arrow(sb, Letter{l});
      p.set_arrow(src, Letter{l}, intern(aa.dst, ab.dst), reward(aa, ab));
    }
  }
  p.validate();
  return p;
}

}  // namespace

QuantAutomaton product_parity_lexmp(const QuantAutomaton& a,
                                    const QuantAutomaton& b) {
  check_same_alphabet(a, b, "product_parity_lexmp");
  if (!a.parity() || a.dim() != 0)
    throw ValidationError(
        "product_parity_lexmp: first operand must carry priorities and no rewards");
  if (b.parity() || b.dim() == 0)
    throw ValidationError(
        "product_parity_lexmp: second operand must carry rewards and no priorities");
  return product(
      a, b, b.dim(), /*parity=*/true,
      [](const QuantAutomaton::Arrow&, const QuantAutomaton::Arrow& ab) {
        return ab.reward;
      },
      [&](StateId sa, StateId) { return a.priority(sa); });
}

QuantAutomaton compose_safety_pair(const QuantAutomaton& safe,
                                   const QuantAutomaton& quant) {
  check_same_alphabet(safe, quant, "compose_safety_pair");
  if (!is_safety(safe))
    throw ValidationError("compose_safety_pair: first operand is not a safety automaton");
  if (quant.parity() || quant.dim() == 0)
    throw ValidationError(
        "compose_safety_pair: second operand must carry rewards and no priorities");
  const std::uint32_t letters = quant.alphabet().letter_count();

  // vbot: component-wise minimal edge reward of quant
  std::vector<Int> vbot(quant.dim());
  bool first = true;
  for (StateId s = 0; s < quant.num_states(); ++s)
    for (std::uint32_t b = 0; b < letters; ++b) {
      const auto& r = quant.arrow(s, Letter{b}).reward;
      for (size_t c = 0; c < quant.dim(); ++c)
        if (first || r[c] < vbot[c]) vbot[c] = r[c];
      first = false;
    }

  // Violated region of safe: heads of reward-0 edges and everything after.
  // All rewards there are 0 forever, so the whole region collapses to one
  // sink in the product.
  std::vector<bool> violated(safe.num_states(), false);
  std::deque<StateId> queue;
  for (StateId s = 0; s < safe.num_states(); ++s)
    for (std::uint32_t b = 0; b < letters; ++b) {
      const auto& arrow = safe.arrow(s, Letter{b});
      if (arrow.reward[0] == 0 && !violated[arrow.dst]) {
        violated[arrow.dst] = true;
        queue.push_back(arrow.dst);
      }
    }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (std::uint32_t b = 0; b < letters; ++b) {
      StateId t = safe.arrow(s, Letter{b}).dst;
      if (!violated[t]) {
        violated[t] = true;
        queue.push_back(t);
      }
    }
  }

  QuantAutomaton p(safe.inputs(), safe.outputs(), quant.dim(), false);
  const RewardVec zero(quant.dim(), Int(0));
  std::optional<StateId> sink;
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> work;
  auto intern = [&](StateId ss, StateId sq) -> StateId {
    if (violated[ss]) {
      if (!sink) sink = p.add_state("violated");
      return *sink;
    }
    auto key = std::make_pair(ss, sq);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    StateId id = p.add_state(safe.name(ss) + "." + quant.name(sq));
    ids.emplace(key, id);
    work.emplace_back(ss, sq);
    return id;
  };
  if (violated[safe.initial()]) {
    StateId id = intern(safe.initial(), quant.initial());
    p.set_initial(id);
  } else {
    p.set_initial(intern(safe.initial(), quant.initial()));
  }
  while (!work.empty()) {
    auto [ss, sq] = work.front();
    work.pop_front();
    const StateId src = ids.at({ss, sq});
    for (std::uint32_t b = 0; b < letters; ++b) {
      const auto& as = safe.arrow(ss, Letter{b});
      const auto& aq = quant.arrow(sq, Letter{b});
      RewardVec r = zero;
      if (as.reward[0] == 1)
        for (size_t c = 0; c < quant.dim(); ++c)
          r[c] = aq.reward[c] - vbot[c] + 1;
      p.set_arrow(src, Letter{b}, intern(as.dst, aq.dst), std::move(r));
    }
  }
  if (sink)
    for (std::uint32_t b = 0; b < letters; ++b)
      p.set_arrow(*sink, Letter{b}, *sink, zero);
  p.validate();
  return p;
}

}  // namespace lexsynt
