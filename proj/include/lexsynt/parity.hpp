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

#include "lexsynt/graph.hpp"

namespace lexsynt {

struct AttractorResult {
  std::vector<bool> set;
  // For owned states in the attractor (minus the target): the edge forcing
  // progress toward the target.
  MemorylessStrategy strategy;
};

// Least fixpoint of: target, owned states with an edge into the set,
// opponent states with all edges into the set.
AttractorResult attractor(const GameGraph& g, Player p,
                          const std::vector<bool>& target);

// Restricted to active states (edges leaving the mask are ignored).
AttractorResult attractor_masked(const GameGraph& g, Player p,
                                 const std::vector<bool>& target,
                                 const std::vector<bool>& active);

struct WinningRegions {
  std::vector<bool> w1, w2;
  MemorylessStrategy strat1, strat2;  // winning on the respective regions
};

// Zielonka's recursive attractor decomposition with memoryless winning
// strategies.  Player 1 wins parity (smallest priority seen infinitely
// often is even).
WinningRegions solve_parity(const GameGraph& g);

// A reachable cycle with odd minimal priority from the initial state, if
// one exists.  Per odd priority q: restrict to priorities >= q, decompose
// into SCCs, succeed on a component with a priority-q state and a cycle
// through it.
std::optional<Lasso> odd_lasso_exists(const GameGraph& g);

// States from which some odd-minimal-priority cycle is reachable.
std::vector<bool> odd_cycle_reachable(const GameGraph& g);

}  // namespace lexsynt
