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

#include <random>
#include <string>

#include "lexsynt/automata.hpp"
#include "lexsynt/graph.hpp"
#include "lexsynt/io.hpp"
#include "lexsynt/mealy.hpp"

namespace testutil {

using namespace lexsynt;

std::string fixture_path(const std::string& name);
QuantAutomaton load_qa(const std::string& name);
GameGraph load_game(const std::string& name);
MealyMachine load_mealy(const std::string& name);

inline Rational rat(long n, long d = 1) { return make_rational(Int(n), Int(d)); }

LexValue lv1(long n, long d = 1);
LexValue lv2(Rational a, Rational b);

// Deterministic pseudo-random source (mt19937 driven directly so results
// are identical across platforms).
struct Rng {
  std::mt19937 gen;
  explicit Rng(std::uint32_t seed) : gen(seed) {}
  std::uint32_t below(std::uint32_t n) { return gen() % n; }
};

struct RandomGameSpec {
  int min_states = 2;
  int max_states = 4;
  int dim = 1;
  int max_reward = 3;
  bool priorities = false;
  int max_priority = 2;
  int max_out_degree = 3;
};

GameGraph random_game(Rng& rng, const RandomGameSpec& spec);

// A copy with every priority set to `prio`, or with priorities erased.
GameGraph with_uniform_priority(const GameGraph& g, int prio);
GameGraph without_priorities(const GameGraph& g);

// Structural isomorphism for small games (backtracking over bijections).
bool game_isomorphic(const GameGraph& a, const GameGraph& b);

// Isomorphism of complete deterministic automata via canonical BFS renaming.
bool qa_isomorphic(const QuantAutomaton& a, const QuantAutomaton& b);

// Same for Mealy machines (reachable parts, state names ignored).
bool mealy_isomorphic(const MealyMachine& a, const MealyMachine& b);

// Letter over `a` with the named signals true, all others false.
Letter letter(const Alphabet& a, std::initializer_list<const char*> positives);

}  // namespace testutil
