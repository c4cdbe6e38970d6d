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

#include "lexsynt/automata.hpp"
#include "lexsynt/graph.hpp"

namespace lexsynt {

// An input-enabled deterministic machine: exactly one (output, successor)
// per state and input letter.
class MealyMachine {
 public:
  struct Tr {
    Letter out;
    StateId dst;
  };

  MealyMachine(std::vector<std::string> inputs, std::vector<std::string> outputs);

  StateId add_state(std::string name);
  void set_transition(StateId src, Letter in, Letter out, StateId dst);
  void set_initial(StateId s) { initial_ = s; }
  void validate() const;  // input-enabledness

  const Alphabet& input_alphabet() const { return in_alpha_; }
  const Alphabet& output_alphabet() const { return out_alpha_; }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }
  size_t num_states() const { return names_.size(); }
  StateId initial() const { return initial_; }
  const std::string& name(StateId s) const { return names_[s]; }
  const Tr& transition(StateId s, Letter in) const;

  // The I/O word produced on an ultimately periodic input word, as a lasso
  // of joint letters over (inputs then outputs).
  Word io_word(const Word& input) const;

 private:
  std::vector<std::string> inputs_, outputs_;
  Alphabet in_alpha_, out_alpha_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::optional<Tr>>> trans_;  // [state][input letter]
  StateId initial_ = 0;
};

// One-player product of a specification automaton with a machine: states
// (automaton state, machine state), one edge per input letter following the
// machine's output and the automaton's transition on the joint letter.
// All remaining choices (the inputs) belong to the minimizing environment.
// Restricted to the reachable part.
GameGraph spec_product(const QuantAutomaton& a, const MealyMachine& m);

struct VerifyResult {
  LexValue value;
  Lasso witness;      // over `product`, payoff equal to `value`
  GameGraph product;  // the spec_product the witness refers to
};

// The exact worst-case value of the machine against the specification:
// inf over all input words of the word value.
VerifyResult verify_value(const QuantAutomaton& a, const MealyMachine& m);

}  // namespace lexsynt
