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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexsynt/graph.hpp"
#include "lexsynt/letters.hpp"

namespace lexsynt {

// A complete deterministic automaton with reward vectors and optional
// priorities: for each state and letter there is exactly one successor.
// The alphabet is the joint signal set, declared as inputs then outputs.
class QuantAutomaton {
 public:
  struct Arrow {
    StateId dst;
    RewardVec reward;
  };

  QuantAutomaton(std::vector<std::string> inputs,
                 std::vector<std::string> outputs, size_t dim, bool parity);

  StateId add_state(std::string name, std::optional<int> priority = std::nullopt);
  void set_arrow(StateId src, Letter l, StateId dst, RewardVec reward);
  void set_initial(StateId s) { initial_ = s; }

  // Completeness and determinism are table-enforced; this checks every
  // slot is filled and reports the first hole as
  // "incomplete at state <name>: {<letter>}".
  void validate() const;

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }
  size_t dim() const { return dim_; }
  bool parity() const { return parity_; }
  size_t num_states() const { return names_.size(); }
  StateId initial() const { return initial_; }
  const std::string& name(StateId s) const { return names_[s]; }
  std::optional<int> priority(StateId s) const { return priorities_[s]; }
  const Arrow& arrow(StateId s, Letter l) const;

  // The automaton as a one-player labeled game graph.
  GameGraph to_game() const;

 private:
  std::vector<std::string> inputs_, outputs_;
  Alphabet alphabet_;
  size_t dim_;
  bool parity_;
  std::vector<std::string> names_;
  std::vector<std::optional<int>> priorities_;
  std::vector<std::vector<std::optional<Arrow>>> trans_;  // [state][letter]
  StateId initial_ = 0;
};

// The value the automaton assigns to the ultimately periodic word: run the
// prefix, iterate the cycle until (state, cycle position) repeats, then the
// payoff of the induced cycle (mean, or Bottom on odd parity).
LexValue eval_word(const QuantAutomaton& a, const Word& w);

// True iff the automaton defines a safety language: d = 1, every reward in
// {0,1}, and no reward-1 edge reachable from the head of a reward-0 edge.
bool is_safety(const QuantAutomaton& a);

// Synchronized product of a parity automaton (priorities, no rewards) with
// a lexicographic mean-payoff automaton (rewards, no priorities): rewards
// from b, priority from a's state.  For every word the value is Bottom if
// a's run has odd minimal recurrent priority, else b's value.
QuantAutomaton product_parity_lexmp(const QuantAutomaton& a,
                                    const QuantAutomaton& b);

// Pair specification <safe, quant>: on safe steps reward is quant's reward
// - vbot + 1 where vbot is the component-wise minimal edge reward of quant;
// once safety is violated every subsequent reward is the zero vector.
// Restricted to the reachable product.
QuantAutomaton compose_safety_pair(const QuantAutomaton& safe,
                                   const QuantAutomaton& quant);

}  // namespace lexsynt
