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

namespace lexsynt {

// One-player lexicographic mean-payoff parity optimum, all choices with the
// maximizer.  value(s) = max over even priorities q and strongly connected
// components U of the priority->=q subgraph that contain a priority-q state,
// are reachable from s and contain a cycle, of the maximal lexicographic
// mean cycle within U; Bottom if no such U exists.
std::vector<LexValue> single_player_max_mpp(const GameGraph& g);

// One-player minimum: Bottom where an odd-minimal-priority cycle is
// reachable, else the minimal lexicographic mean over reachable cycles.
std::vector<LexValue> single_player_min_mpp(const GameGraph& g);

// Exact value of a fixed finite-memory strategy: the product of g with the
// memory machine with the owner's moves fixed is a one-player problem for
// the opponent; values are projected to original states at initial memory.
// Works with or without priorities (without, parity is vacuous).
std::vector<LexValue> evaluate_strategy(const GameGraph& g,
                                        const FiniteMemoryStrategy& s,
                                        Player owner);

}  // namespace lexsynt
