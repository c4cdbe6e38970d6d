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

#include <doctest.h>

#include "helpers.hpp"
#include "lexsynt/mealy.hpp"
#include "lexsynt/oracle.hpp"
#include "lexsynt/parity.hpp"

using namespace lexsynt;
using namespace testutil;

namespace {

GameGraph shifted_priorities(const GameGraph& g) {
  GameGraph r;
  for (StateId s = 0; s < g.num_states(); ++s)
    r.add_state(g.name(s), opponent(g.owner(s)), *g.priority(s) + 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    r.add_edge(ed.src, ed.dst, ed.reward, ed.label);
  }
  r.set_initial(g.initial());
  return r;
}

}  // namespace

TEST_CASE("attractor fixpoints") {
  GameGraph f = load_game("fig5.game");
  std::vector<bool> all{true, true};
  CHECK(attractor(f, Player::P1, all).set == all);

  std::vector<bool> s1_only{false, true};
  AttractorResult a = attractor(f, Player::P1, s1_only);
  CHECK(a.set == std::vector<bool>{true, true});
  CHECK(f.edge(*a.strategy.moves[0]).dst == 1);  // s0 forces into s1

  // a chain owned by the opponent with an escape is not attracted
  GameGraph g;
  g.add_state("a", Player::P2);
  g.add_state("b", Player::P1);
  g.add_state("t", Player::P1);
  g.add_edge(0, 2, {});
  g.add_edge(0, 0, {});  // escape
  g.add_edge(1, 0, {});
  g.add_edge(2, 2, {});
  g.set_initial(0);
  std::vector<bool> target{false, false, true};
  CHECK(attractor(g, Player::P1, target).set == target);
}

TEST_CASE("attractor is monotone and idempotent") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    RandomGameSpec spec;
    spec.max_states = 5;
    GameGraph g = random_game(rng, spec);
    std::vector<bool> small(g.num_states(), false), big(g.num_states(), false);
    for (StateId s = 0; s < g.num_states(); ++s) {
      big[s] = rng.below(2) == 0;
      small[s] = big[s] && rng.below(2) == 0;
    }
    auto as = attractor(g, Player::P1, small).set;
    auto ab = attractor(g, Player::P1, big).set;
    for (StateId s = 0; s < g.num_states(); ++s)
      CHECK((!as[s] || ab[s]));  // monotone
    CHECK(attractor(g, Player::P1, as).set == as);  // idempotent
  }
}

TEST_CASE("parity regions on the fixtures") {
  GameGraph f = load_game("fig5.game");
  WinningRegions w = solve_parity(f);
  CHECK(w.w1 == std::vector<bool>{true, true});

  GameGraph all_even = with_uniform_priority(load_game("fig6.game"), 0);
  WinningRegions we = solve_parity(all_even);
  for (StateId s = 0; s < all_even.num_states(); ++s) CHECK(we.w1[s]);

  GameGraph bad;
  bad.add_state("s", Player::P2, 1);
  bad.add_edge(0, 0, {});
  bad.set_initial(0);
  WinningRegions wb = solve_parity(bad);
  CHECK(wb.w2 == std::vector<bool>{true});
}

TEST_CASE("parity strategies are winning on their regions") {
  Rng rng(7777);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGameSpec spec;
    spec.max_states = 5;
    spec.priorities = true;
    spec.max_priority = 3;
    GameGraph g = random_game(rng, spec);
    WinningRegions w = solve_parity(g);

    for (StateId s = 0; s < g.num_states(); ++s)
      CHECK(w.w1[s] != w.w2[s]);  // partition

    // Player-2 edges leaving w1 stay in w1 (and symmetrically)
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (w.w1[ed.src] && g.owner(ed.src) == Player::P2) CHECK(w.w1[ed.dst]);
      if (w.w2[ed.src] && g.owner(ed.src) == Player::P1) CHECK(w.w2[ed.dst]);
    }

    // under strat1 on w1 no odd cycle remains
    bool any1 = false, any2 = false;
    for (StateId s = 0; s < g.num_states(); ++s) {
      any1 = any1 || w.w1[s];
      any2 = any2 || w.w2[s];
    }
    if (any1) {
      Subgraph sub = induced_subgraph(g, w.w1);
      MemorylessStrategy strat;
      strat.moves.assign(sub.graph.num_states(), std::nullopt);
      for (StateId s = 0; s < g.num_states(); ++s)
        if (w.w1[s] && g.owner(s) == Player::P1) {
          // remap the winning move into the subgraph
          const Edge& ed = g.edge(*w.strat1.moves[s]);
          for (EdgeId e = 0; e < sub.graph.num_edges(); ++e)
            if (sub.edge_to_old[e] == *w.strat1.moves[s])
              strat.moves[*sub.to_new[s]] = e;
          CHECK(w.w1[ed.dst]);
        }
      GameGraph fixed = restrict_to_strategy(sub.graph, strat, Player::P1);
      CHECK(!odd_lasso_exists(fixed).has_value());
    }
    // under strat2 on w2 every cycle is odd
    if (any2) {
      Subgraph sub = induced_subgraph(g, w.w2);
      MemorylessStrategy strat;
      strat.moves.assign(sub.graph.num_states(), std::nullopt);
      for (StateId s = 0; s < g.num_states(); ++s)
        if (w.w2[s] && g.owner(s) == Player::P2)
          for (EdgeId e = 0; e < sub.graph.num_edges(); ++e)
            if (sub.edge_to_old[e] == *w.strat2.moves[s])
              strat.moves[*sub.to_new[s]] = e;
      GameGraph fixed = restrict_to_strategy(sub.graph, strat, Player::P2);
      for (const auto& c : oracle::enumerate_cycles(fixed))
        CHECK(*c.min_priority % 2 == 1);
    }

    // region complementarity under role swap
    WinningRegions swapped = solve_parity(shifted_priorities(g));
    CHECK(swapped.w1 == w.w2);
    CHECK(swapped.w2 == w.w1);
  }
}

TEST_CASE("odd lasso detection") {
  GameGraph all_even = with_uniform_priority(load_game("fig6.game"), 0);
  CHECK(!odd_lasso_exists(all_even).has_value());

  GameGraph g;
  g.add_state("a", Player::P1, 2);
  g.add_state("b", Player::P1, 3);
  g.add_edge(0, 1, {});
  g.add_edge(1, 1, {});
  g.set_initial(0);
  auto l = odd_lasso_exists(g);
  REQUIRE(l.has_value());
  CHECK(lasso_parity(g, *l) == CycleParity::Odd);

  // a machine that never grants, checked against the liveness spec
  QuantAutomaton phi = load_qa("phiA1.qa");
  MealyMachine never(std::vector<std::string>{"r"},
                     std::vector<std::string>{"g"});
  never.add_state("m0");
  never.set_transition(0, Letter{0}, Letter{0}, 0);
  never.set_transition(0, Letter{1}, Letter{0}, 0);
  never.set_initial(0);
  GameGraph prod = spec_product(phi, never);
  auto witness = odd_lasso_exists(prod);
  REQUIRE(witness.has_value());
  // the witness loops in the pending state
  for (EdgeId e : witness->cycle)
    CHECK(prod.name(prod.edge(e).src).find("pending") != std::string::npos);
}
