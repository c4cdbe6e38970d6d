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

#include <span>
#include <vector>

#include "lexsynt/graph.hpp"
#include "lexsynt/scalarize.hpp"

namespace lexsynt {

struct MpOptions {
  Deadline deadline{};
};

// Exact per-state value of the two-player mean-payoff game with the given
// integer edge weights, `maximizer` owning the max states.  Value iteration
// v_k(s) = opt over edges of (w(e) + v_{k-1}(t)) for up to
// k* = 8|S|^3 max(W,1) steps; each v_k(s)/k lies within 2|S|W/k of the true
// value, which is a rational with denominator <= |S|, so the iteration
// stops as soon as that interval isolates a unique such rational (always by
// k*) and snaps to it.
std::vector<Rational> mp_values(const GameGraph& g, std::span<const Int> weights,
                                Player maximizer, const MpOptions& opt = {});

// Same, with edges outside `edge_mask` removed (every state must keep at
// least one edge).
std::vector<Rational> mp_values_masked(const GameGraph& g,
                                       std::span<const Int> weights,
                                       Player maximizer,
                                       const std::vector<bool>& edge_mask,
                                       const MpOptions& opt = {});

}  // namespace lexsynt
