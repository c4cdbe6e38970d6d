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
#include <span>
#include <vector>

#include "lexsynt/graph.hpp"

namespace lexsynt {

// A lexicographic reward collapsed to one integer weight per edge with
// multipliers chosen so that for any two cycles of length <= |S| the
// lexicographic order of their mean-reward vectors equals the numeric order
// of their scalarized means.  Multipliers are defined right to left:
// m_d = 1, m_i = |S|^2 * (max scalarized weight of components i+1..d) + 1.
struct ScalarizedGame {
  GameGraph base;
  std::vector<Int> weights;      // per edge
  std::vector<Int> multipliers;  // m_1..m_d
};

ScalarizedGame scalarize(const GameGraph& g);

enum class ExtremeMode { Min, Max };

struct MeanCycleWitness {
  Rational mean;
  Lasso lasso;  // prefix from the initial state, cycle achieving `mean`
};

// Exact extreme cycle mean over all cycles reachable from the initial
// state, with a witness simple cycle (Karp per reachable strongly connected
// component, tight-edge cycle extraction).  Throws if the reachable
// subgraph is acyclic.
MeanCycleWitness extreme_mean_cycle(const GameGraph& g,
                                    std::span<const Int> weights,
                                    ExtremeMode mode);

// Per-state one-player lexicographic optimum: for every state, the extreme
// (by scalarized mean) cycle reachable from it, with the mean-reward vector
// recovered from the witness cycle.
struct CycleCandidate {
  Rational scalar_mean;
  std::vector<Rational> vec_mean;
  std::vector<EdgeId> cycle;
};

struct OnePlayerExtremes {
  std::vector<CycleCandidate> candidates;
  // candidate index per state; every state of a validated graph reaches a
  // cycle, so this is total
  std::vector<std::uint32_t> best;
};

OnePlayerExtremes one_player_lex_extreme(const GameGraph& g, ExtremeMode mode);

// Same, restricted to a state subset (edges with both endpoints inside).
OnePlayerExtremes one_player_lex_extreme_masked(const GameGraph& g,
                                                ExtremeMode mode,
                                                const std::vector<bool>& states);

namespace detail {

// Strongly connected components over a masked subgraph.  Components are
// numbered in reverse topological order of the condensation (sinks first).
struct SccResult {
  std::vector<int> comp;  // -1 outside the mask
  int count = 0;
};

SccResult strongly_connected_components(const GameGraph& g,
                                        const std::vector<bool>& states);

// Karp's extreme cycle mean inside one SCC given by its member states,
// with a witness cycle (edge ids) found among tight edges.  Returns
// nullopt if the component has no internal edge.
std::optional<CycleCandidate> extreme_cycle_in_scc(
    const GameGraph& g, std::span<const Int> weights, ExtremeMode mode,
    const std::vector<StateId>& members, const std::vector<bool>& states);

// Shortest edge path (by hops) from `from` to any state with target[s],
// restricted to masked states.  Returns nullopt if unreachable.
std::optional<std::vector<EdgeId>> bfs_path(const GameGraph& g, StateId from,
                                            const std::vector<bool>& target,
                                            const std::vector<bool>& states);

// Rotates a cycle's edge list so it starts at `at` (which must lie on it).
std::vector<EdgeId> rotate_cycle(const GameGraph& g,
                                 const std::vector<EdgeId>& cycle, StateId at);

}  // namespace detail

}  // namespace lexsynt
