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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexsynt/errors.hpp"
#include "lexsynt/letters.hpp"
#include "lexsynt/numbers.hpp"
#include "lexsynt/values.hpp"

namespace lexsynt {

using StateId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class Player { P1, P2 };

inline Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }

// d-vector of natural rewards; all edges of one graph share dimension d.
using RewardVec = std::vector<Int>;

struct Edge {
  StateId src;
  StateId dst;
  RewardVec reward;
  std::optional<Letter> label;
};

// A two-player labeled game graph with optional per-state priorities and
// d-dimensional natural rewards on edges.  States and edges are immutable
// once validate() has been called.
class GameGraph {
 public:
  StateId add_state(std::string name, Player owner,
                    std::optional<int> priority = std::nullopt) {
    names_.push_back(std::move(name));
    owners_.push_back(owner);
    priorities_.push_back(priority);
    out_.emplace_back();
    return static_cast<StateId>(names_.size() - 1);
  }

  EdgeId add_edge(StateId src, StateId dst, RewardVec reward,
                  std::optional<Letter> label = std::nullopt) {
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{src, dst, std::move(reward), label});
    out_[src].push_back(id);
    return id;
  }

  void set_initial(StateId s) { initial_ = s; }
  void set_alphabet(Alphabet a) { alphabet_ = std::move(a); }

  size_t num_states() const { return names_.size(); }
  size_t num_edges() const { return edges_.size(); }
  StateId initial() const { return initial_; }
  const std::string& name(StateId s) const { return names_[s]; }
  Player owner(StateId s) const { return owners_[s]; }
  std::optional<int> priority(StateId s) const { return priorities_[s]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const EdgeId> out(StateId s) const { return out_[s]; }
  const Alphabet& alphabet() const { return alphabet_; }

  bool has_priorities() const {
    return !priorities_.empty() && priorities_[0].has_value();
  }
  int max_priority() const;

  // Reward dimension; 0 for a rewardless (pure parity) graph.
  size_t dimension() const { return edges_.empty() ? 0 : edges_[0].reward.size(); }

  // Checks the structural invariants: nonempty, every state has an
  // outgoing edge, deterministic labeling, uniform reward dimension,
  // natural rewards, priorities all-or-none and >= 0.
  void validate() const;

 private:
  std::vector<std::string> names_;
  std::vector<Player> owners_;
  std::vector<std::optional<int>> priorities_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<Edge> edges_;
  StateId initial_ = 0;
  Alphabet alphabet_;
};

// Canonical representation of an ultimately periodic play: a finite prefix
// of edges from `start` followed by a nonempty edge cycle.
struct Lasso {
  StateId start = 0;
  std::vector<EdgeId> prefix;
  std::vector<EdgeId> cycle;
};

// Throws ValidationError unless consecutive edges connect, the cycle is
// nonempty and closes on its own first state.
void validate_lasso(const GameGraph& g, const Lasso& l);

// Component-wise average of the rewards on the cycle; the prefix is ignored.
std::vector<Rational> lasso_mean(const GameGraph& g, const Lasso& l);

enum class CycleParity { Even, Odd };

// Even iff the minimum priority among the cycle's states is even.
CycleParity lasso_parity(const GameGraph& g, const Lasso& l);

// Bottom if the cycle's parity is odd, else the mean as a vector value.
LexValue lasso_mpp_payoff(const GameGraph& g, const Lasso& l);

// A memoryless strategy: one chosen outgoing edge per owned state.
struct MemorylessStrategy {
  std::vector<std::optional<EdgeId>> moves;  // indexed by StateId

  EdgeId at(StateId s) const {
    if (s >= moves.size() || !moves[s])
      throw ValidationError("strategy undefined at state " + std::to_string(s));
    return *moves[s];
  }
};

// Checks that every state owned by `p` maps to one of its own out-edges.
void validate_strategy(const GameGraph& g, const MemorylessStrategy& s, Player p);

// A finite-memory strategy: a deterministic memory machine updated on every
// observed game state, plus a move map on (memory, owned state).  The
// initial memory is the memory after observing the initial state; entering
// state t from memory m moves the memory to update[m][t] before t's move is
// chosen.
struct FiniteMemoryStrategy {
  std::uint32_t memory_count = 1;
  std::uint32_t initial_memory = 0;
  std::vector<std::vector<std::uint32_t>> update;          // [memory][state]
  std::vector<std::vector<std::optional<EdgeId>>> moves;   // [memory][state]

  static FiniteMemoryStrategy from_memoryless(const MemorylessStrategy& m,
                                              size_t num_states);

  EdgeId move_at(std::uint32_t mem, StateId s) const {
    if (!moves[mem][s])
      throw ValidationError("finite-memory strategy undefined at state " +
                            std::to_string(s));
    return *moves[mem][s];
  }
};

void validate_strategy(const GameGraph& g, const FiniteMemoryStrategy& s, Player p);

// The synchronous product of a game with the strategy's memory machine,
// with the owner's moves fixed.  Only product states reachable from the
// seeds (s, initial memory) are built; the owner has exactly one outgoing
// edge per product state.  Rewards and priorities are inherited.
// seed[s] is the product state of (s, initial memory).
struct StrategyProduct {
  GameGraph graph;
  std::vector<StateId> seed;
};

StrategyProduct strategy_product(const GameGraph& g,
                                 const FiniteMemoryStrategy& s, Player owner);

// The game with the owner's unchosen edges removed.
GameGraph restrict_to_strategy(const GameGraph& g, const MemorylessStrategy& s,
                               Player owner);

// Subgraph induced by a state mask, with edge endpoints inside the mask.
struct Subgraph {
  GameGraph graph;
  std::vector<StateId> to_old;                  // new -> old
  std::vector<std::optional<StateId>> to_new;   // old -> new
  std::vector<EdgeId> edge_to_old;              // new edge -> old edge
};

Subgraph induced_subgraph(const GameGraph& g, const std::vector<bool>& keep);

// Swaps state owners (used by the determinacy tests).
GameGraph swap_owners(const GameGraph& g);

}  // namespace lexsynt
