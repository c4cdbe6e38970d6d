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
#include "lexsynt/mp_game.hpp"
#include "lexsynt/scalarize.hpp"

namespace lexsynt {

struct LexMpSolution {
  std::vector<LexValue> values;      // per-state lexicographic value vector
  std::vector<Rational> scalar;      // per-state scalarized game value
  MemorylessStrategy p1;             // optimal for the maximizer
  MemorylessStrategy p2;             // optimal for the minimizer
  std::vector<Int> multipliers;
};

// Solves the lexicographic mean-payoff game exactly.  Strategies are
// extracted by edge-fixing with re-solve verification (ties broken by
// lowest edge index) and are optimal: fixing either one, the opponent's
// exact best response equals the value map.  Priorities, if present, are
// ignored here.
LexMpSolution lex_mp_solve(const GameGraph& g, const MpOptions& opt = {});

// Same with the maximizer role assigned explicitly (role-swap testing).
LexMpSolution lex_mp_solve_directed(const GameGraph& g, Player maximizer,
                                    const MpOptions& opt = {});

// Exact lexicographic optimum of the opponent in the graph restricted by
// `fixed` (a strategy for `owner`), per state.
std::vector<LexValue> best_response_value(const GameGraph& g,
                                          const MemorylessStrategy& fixed,
                                          Player owner);

}  // namespace lexsynt
