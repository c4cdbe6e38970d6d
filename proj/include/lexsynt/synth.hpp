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
#include "lexsynt/lmpp.hpp"
#include "lexsynt/mealy.hpp"

namespace lexsynt {

// The synthesis game of a specification automaton.  The environment
// (Player 2) owns one state per automaton state and moves first by picking
// an input letter; the system (Player 1) owns intermediate states and picks
// the output.  Environment edges carry zero reward, system edges double the
// automaton's reward, so game values equal automaton values directly.
// Input letters with identical output behavior share one intermediate
// state.  With priorities, environment states keep the automaton's
// priority and intermediate states take the maximal one.
struct SplitGame {
  GameGraph graph;
  std::vector<std::string> inputs, outputs;
  unsigned in_count = 0;  // joint letter = in_bits | (out_bits << in_count)
  std::vector<StateId> env_of;                 // automaton state -> env state
  std::vector<std::vector<StateId>> inter_of;  // [automaton state][input bits]
  std::vector<std::optional<StateId>> auto_of;  // env state -> automaton state

  Letter edge_output(EdgeId e) const;  // output letter of a system edge
};

SplitGame split_to_game(const QuantAutomaton& a);

// Collects inputs and chosen outputs into a machine: states are the
// reachable (environment state, memory) pairs.
MealyMachine strategy_to_mealy(const SplitGame& sg,
                               const FiniteMemoryStrategy& s);

struct SynthesisResult {
  MealyMachine machine;
  LexValue value;  // the game value; the machine attains it exactly iff `exact`
  bool exact = true;
};

// Optimal (or, with priorities and no memoryless optimum, eps-optimal)
// Mealy machine for the specification.
SynthesisResult synthesize(const QuantAutomaton& a,
                           const std::optional<std::vector<Rational>>& eps =
                               std::nullopt,
                           const LmppOptions& opt = {});

enum class Verdict { Realizable, LimitOnly, Unrealizable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Realizable: return "realizable";
    case Verdict::LimitOnly: return "limit-only";
    case Verdict::Unrealizable: return "unrealizable";
  }
  return "?";
}

struct RealizabilityVerdict {
  Verdict verdict;
  LexValue value;  // game value at the initial state
  std::optional<MealyMachine> witness;
};

// cutoff <= value decides realizability; at equality with priorities the
// verdict is Realizable exactly when a memoryless optimal strategy exists,
// else LimitOnly.  When eps is supplied a witness machine within eps is
// attached where one exists.
RealizabilityVerdict classify_realizability(
    const QuantAutomaton& a, const LexValue& cutoff,
    const std::optional<std::vector<Rational>>& eps = std::nullopt,
    const LmppOptions& opt = {});

}  // namespace lexsynt
