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
#include "lexsynt/lexmp.hpp"
#include "lexsynt/parity.hpp"
#include "lexsynt/single_player.hpp"

namespace lexsynt {

struct LmppOptions {
  // Cap on the memory of exhaustively enumerated strategies.  Three-phase
  // templates are driven by the certification target and bounded by
  // max_template_k instead.
  int memory_cap = 8;
  int max_template_k = 4096;
  // Largest strategy family enumerated exhaustively per tier.
  std::uint64_t enumeration_budget = 2000;
  unsigned jobs = 1;
  Deadline deadline{};
};

// Per-state distance bound between the certified bracket's sides.
struct GapBound {
  bool infinite = false;
  std::vector<Rational> dist;  // empty and !infinite means zero

  bool zero() const { return !infinite && dist.empty(); }
};

struct CertifiedSolution {
  std::vector<LexValue> values;  // = upper bracket side (exact when certified)
  std::vector<GapBound> gap;     // value uncertainty, 0 iff certified exact
  bool certified = false;        // every state has gap 0
  bool cap_exhausted = false;    // some cap stopped the search early; flagged
  FiniteMemoryStrategy p1_witness;
  FiniteMemoryStrategy p2_witness;
  std::vector<LexValue> p1_value;  // exact evaluation of p1_witness
  std::vector<LexValue> p2_value;  // exact evaluation of p2_witness
};

// Certified-bounds engine.  States in the Player-2 parity region get value
// Bottom exactly; elsewhere Player-1 lower bounds (three-phase templates
// seeded from lex_mp_solve and attractor strategies, then exhaustive
// strategy families) and Player-2 upper bounds (exhaustive families) are
// evaluated exactly and a state is closed when its bracket isolates a
// unique value on the denominator-<=|S| grid.  All priorities even is a
// fast path through lex_mp_solve.
CertifiedSolution solve_lmpp(const GameGraph& g, const LmppOptions& opt = {});

// Strategy with memory O(K + |S|): play mp_strat, counting moves; after the
// counter exhausts, play the attractor strategy until a target state is
// entered, which resets the counter.  Every non-target state must lie in
// the attractor.
FiniteMemoryStrategy three_phase_strategy(const GameGraph& g,
                                          const MemorylessStrategy& mp_strat,
                                          const AttractorResult& attr,
                                          const std::vector<bool>& target,
                                          int k);

// Deepens the engine until a single Player-1 strategy is within eps of the
// upper bracket side everywhere (strictly); certified
// evaluate_strategy(result) > values - eps.  Throws ResourceCapError if the
// caps are exhausted first.
FiniteMemoryStrategy epsilon_optimal_strategy(const GameGraph& g,
                                              const std::vector<Rational>& eps,
                                              const LmppOptions& opt = {});

// A memoryless Player-1 strategy whose exact evaluation equals the certified
// value map, if one exists.  None implies no finite-memory optimal strategy
// exists.  Requires sol.certified.
std::optional<MemorylessStrategy> has_memoryless_optimal(
    const GameGraph& g, const CertifiedSolution& sol,
    const LmppOptions& opt = {});

// A Player-1 strategy whose exact evaluation at the initial state is at
// least `cutoff`, if the engine finds one within its caps.
std::optional<FiniteMemoryStrategy> strategy_achieving(const GameGraph& g,
                                                       const LexValue& cutoff,
                                                       const LmppOptions& opt = {});

}  // namespace lexsynt
