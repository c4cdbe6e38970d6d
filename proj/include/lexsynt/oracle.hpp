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

#include "lexsynt/graph.hpp"

// Independent brute-force engines used only for testing: exhaustive
// strategy enumeration, exhaustive cycle enumeration, and bounded-memory
// value bounds.  No scalarization, no value iteration, no attractors: only
// lasso simulation and enumeration, so results cross-check the solvers
// without sharing their code.  Hard instance-size caps raise
// ResourceCapError instead of degrading silently.

namespace lexsynt::oracle {

struct CycleInfo {
  std::vector<EdgeId> edges;
  std::vector<Rational> mean;
  std::optional<int> min_priority;
};

// All simple cycles reachable from the initial state, by depth-first
// enumeration.  Caps at 12 states.
std::vector<CycleInfo> enumerate_cycles(const GameGraph& g);

// max over Player-1 memoryless strategies of min over Player-2 memoryless
// strategies of the unique induced lasso's mean from each state.  No
// priorities; caps at 2^16 strategy pairs.
std::vector<LexValue> enumerate_memoryless_game_value(const GameGraph& g);

struct MemoryBounds {
  std::vector<LexValue> lower, upper;
};

// lower(s) = max over Player-1 strategies in the family (all memoryless
// machines plus all modular step-counter machines with up to m memory
// states) of the exact best response of Player 2, computed by cycle
// enumeration on the strategy product; upper is the min-max analog.
// lower <= value <= upper, and both tighten as m grows.
MemoryBounds bounded_memory_bounds(const GameGraph& g, int m);

}  // namespace lexsynt::oracle
