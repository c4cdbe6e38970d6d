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
#include "lexsynt/lmpp.hpp"
#include "lexsynt/mealy.hpp"
#include "lexsynt/oracle.hpp"

using namespace lexsynt;
using namespace testutil;

namespace {

GameGraph fig5() { return load_game("fig5.game"); }

FiniteMemoryStrategy fig5_three_phase(const GameGraph& g, int k) {
  LexMpSolution mp = lex_mp_solve(g);
  std::vector<bool> target{false, true};
  AttractorResult attr = attractor(g, Player::P1, target);
  return three_phase_strategy(g, mp.p1, attr, target, k);
}

GameGraph all_odd() {
  GameGraph g;
  g.add_state("a", Player::P1, 1);
  g.add_state("b", Player::P1, 3);
  g.add_edge(0, 1, {Int(4)});
  g.add_edge(1, 0, {Int(4)});
  g.set_initial(0);
  return g;
}

}  // namespace

TEST_CASE("single-player maximum dwells on the best cycle behind an anchor") {
  GameGraph g = fig5();
  auto vals = single_player_max_mpp(g);
  CHECK(vals[0] == lv1(10));
  CHECK(vals[1] == lv1(10));

  auto odd = single_player_max_mpp(all_odd());
  CHECK(odd[0] == LexValue::bottom());
  CHECK(odd[1] == LexValue::bottom());

  // all priorities even: parity is vacuous
  Rng rng(606);
  for (int trial = 0; trial < 15; ++trial) {
    RandomGameSpec spec;
    spec.max_states = 5;
    GameGraph h = random_game(rng, spec);
    GameGraph he = with_uniform_priority(h, 0);
    OnePlayerExtremes ext = one_player_lex_extreme(h, ExtremeMode::Max);
    auto v = single_player_max_mpp(he);
    for (StateId s = 0; s < h.num_states(); ++s)
      CHECK(v[s] == LexValue::vec(ext.candidates[ext.best[s]].vec_mean));
  }
}

TEST_CASE("single-player minimum spots odd escapes") {
  QuantAutomaton phi = load_qa("phiA1.qa");
  MealyMachine never(std::vector<std::string>{"r"},
                     std::vector<std::string>{"g"});
  never.add_state("m0");
  never.set_transition(0, Letter{0}, Letter{0}, 0);
  never.set_transition(0, Letter{1}, Letter{0}, 0);
  never.set_initial(0);
  GameGraph prod = spec_product(phi, never);
  CHECK(single_player_min_mpp(prod)[prod.initial()] == LexValue::bottom());

  GameGraph g;
  g.add_state("a", Player::P2, 0);
  g.add_state("b", Player::P2, 0);
  g.add_edge(0, 0, {Int(2)});
  g.add_edge(0, 1, {Int(0)});
  g.add_edge(1, 1, {Int(7)});
  g.set_initial(0);
  CHECK(single_player_min_mpp(g)[0] == lv1(2));

  GameGraph cm = spec_product(load_qa("C.qa"), load_mealy("Mfig6.mealy"));
  GameGraph cme = with_uniform_priority(cm, 0);
  CHECK(single_player_min_mpp(cme)[cme.initial()] == lv1(2));
}

TEST_CASE("strategy evaluation on the two-state parity game") {
  GameGraph g = fig5();
  MemorylessStrategy exit;
  exit.moves = {EdgeId(1), EdgeId(2)};
  CHECK(evaluate_strategy(g, FiniteMemoryStrategy::from_memoryless(exit, 2),
                          Player::P1)[0] == lv1(5));
  CHECK(evaluate_strategy(g, fig5_three_phase(g, 9), Player::P1)[0] ==
        lv1(100, 11));

  GameGraph loop;
  loop.add_state("s", Player::P1, 0);
  loop.add_edge(0, 0, {Int(6)});
  loop.set_initial(0);
  MemorylessStrategy only;
  only.moves = {EdgeId(0)};
  CHECK(evaluate_strategy(loop, FiniteMemoryStrategy::from_memoryless(only, 1),
                          Player::P1)[0] == lv1(6));
}

TEST_CASE("three-phase payoffs match the closed form and grow with k") {
  GameGraph g = fig5();
  CHECK(evaluate_strategy(g, fig5_three_phase(g, 18), Player::P1)[0] ==
        lv1(19, 2));
  LexValue prev = LexValue::bottom();
  for (int k = 1; k <= 50; ++k) {
    LexValue v = evaluate_strategy(g, fig5_three_phase(g, k), Player::P1)[0];
    CHECK(v == lv1(10 * k + 10, k + 2));  // 10 - 10/(k+2)
    CHECK(lex_less(prev, v));
    prev = v;
  }
}

TEST_CASE("a three-phase round through the target collapses to the mp play") {
  GameGraph g;
  g.add_state("a", Player::P1, 0);
  g.add_state("b", Player::P1, 0);
  g.add_edge(0, 1, {Int(3)});
  g.add_edge(1, 0, {Int(1)});
  g.set_initial(0);
  LexMpSolution mp = lex_mp_solve(g);
  std::vector<bool> target{true, false};
  AttractorResult attr = attractor(g, Player::P1, target);
  FiniteMemoryStrategy tp = three_phase_strategy(g, mp.p1, attr, target, 1);
  CHECK(evaluate_strategy(g, tp, Player::P1) == mp.values);
}

TEST_CASE("three-phase construction rejects uncovered states") {
  GameGraph g;
  g.add_state("a", Player::P1, 0);
  g.add_state("b", Player::P1, 1);
  g.add_edge(0, 0, {Int(1)});
  g.add_edge(1, 1, {Int(1)});  // b can never reach a
  g.set_initial(0);
  LexMpSolution mp = lex_mp_solve(g);
  std::vector<bool> target{true, false};
  AttractorResult attr = attractor(g, Player::P1, target);
  CHECK_THROWS_AS(three_phase_strategy(g, mp.p1, attr, target, 3),
                  ValidationError);
}

TEST_CASE("solve_lmpp certifies the infinite-memory game and the fast path") {
  GameGraph g = fig5();
  CertifiedSolution sol = solve_lmpp(g);
  CHECK(sol.certified);
  CHECK(sol.values[0] == lv1(10));
  CHECK(sol.values[1] == lv1(10));
  CHECK(sol.gap[0].zero());
  CHECK(sol.p2_value[0] == lv1(10));  // certified by the Player-2 side

  GameGraph fig6e = with_uniform_priority(load_game("fig6.game"), 0);
  CertifiedSolution even = solve_lmpp(fig6e);
  CHECK(even.certified);
  CHECK(even.values[fig6e.initial()] == lv1(2));
  CHECK(even.values == lex_mp_solve(fig6e).values);
}

TEST_CASE("solve_lmpp marks Bottom exactly on the Player-2 parity region") {
  Rng rng(9090);
  for (int trial = 0; trial < 25; ++trial) {
    RandomGameSpec spec;
    spec.min_states = 3;
    spec.max_states = 3;
    spec.max_reward = 2;
    spec.priorities = true;
    spec.max_priority = 2;
    GameGraph g = random_game(rng, spec);
    LmppOptions opt;
    opt.memory_cap = 2;
    opt.enumeration_budget = 400;
    CertifiedSolution sol = solve_lmpp(g, opt);
    WinningRegions w = solve_parity(g);
    LexMpSolution unconstrained = lex_mp_solve(without_priorities(g));
    for (StateId s = 0; s < g.num_states(); ++s) {
      CHECK(sol.values[s].is_bottom() == w.w2[s]);
      // parity can only lower the value
      CHECK(lex_leq(sol.values[s], unconstrained.values[s]));
      // sandwich soundness
      CHECK(lex_leq(sol.p1_value[s], sol.values[s]));
      CHECK(lex_leq(sol.values[s], sol.p2_value[s]));
    }
  }
}

TEST_CASE("single-player solvers agree with the oracle's exact responses") {
  Rng rng(6161);
  int p1_only = 0, p2_only = 0;
  while (p1_only < 12 || p2_only < 12) {
    RandomGameSpec spec;
    spec.max_states = 5;
    spec.max_reward = 3;
    spec.priorities = true;
    spec.max_priority = 3;
    GameGraph g = random_game(rng, spec);
    bool has1 = false, has2 = false;
    for (StateId s = 0; s < g.num_states(); ++s)
      (g.owner(s) == Player::P1 ? has1 : has2) = true;
    if (!has2 && p1_only < 12) {
      ++p1_only;  // maximizer alone: the oracle upper at m=1 is exact
      auto bounds = oracle::bounded_memory_bounds(g, 1);
      CHECK(single_player_max_mpp(g) == bounds.upper);
    } else if (!has1 && p2_only < 12) {
      ++p2_only;  // minimizer alone: the oracle lower at m=1 is exact
      auto bounds = oracle::bounded_memory_bounds(g, 1);
      CHECK(single_player_min_mpp(g) == bounds.lower);
    }
  }
}

TEST_CASE("epsilon-optimal strategies match the paper's bound on k") {
  GameGraph g = fig5();
  FiniteMemoryStrategy e1 = epsilon_optimal_strategy(g, {rat(1)});
  CHECK(evaluate_strategy(g, e1, Player::P1)[0] == lv1(100, 11));
  CHECK(e1.memory_count == 11);  // the k = 9 template

  FiniteMemoryStrategy e2 = epsilon_optimal_strategy(g, {rat(1, 2)});
  CHECK(evaluate_strategy(g, e2, Player::P1)[0] == lv1(200, 21));
  CHECK(e2.memory_count == 21);  // the k = 19 template

  GameGraph fig6e = with_uniform_priority(load_game("fig6.game"), 0);
  FiniteMemoryStrategy me = epsilon_optimal_strategy(fig6e, {rat(1, 7)});
  CHECK(me.memory_count == 1);  // memoryless suffices on an all-even game
  CHECK(evaluate_strategy(fig6e, me, Player::P1) == lex_mp_solve(fig6e).values);
}

TEST_CASE("memoryless optimality decisions") {
  GameGraph g = fig5();
  CertifiedSolution sol = solve_lmpp(g);
  CHECK(!has_memoryless_optimal(g, sol).has_value());

  GameGraph fig6z = with_uniform_priority(load_game("fig6.game"), 0);
  CertifiedSolution sol6 = solve_lmpp(fig6z);
  auto mo = has_memoryless_optimal(fig6z, sol6);
  REQUIRE(mo.has_value());
  CHECK(evaluate_strategy(fig6z,
                          FiniteMemoryStrategy::from_memoryless(
                              *mo, fig6z.num_states()),
                          Player::P1) == sol6.values);
  // the grant-on-request strategy of the figure
  for (StateId s = 0; s < fig6z.num_states(); ++s) {
    if (fig6z.name(s) == "i0r") CHECK(fig6z.edge(mo->at(s)).reward[0] == 4);
    if (fig6z.name(s) == "i0n")
      CHECK(fig6z.name(fig6z.edge(mo->at(s)).dst) == "c0");
  }

  CertifiedSolution uncertified = sol;
  uncertified.certified = false;
  CHECK_THROWS_AS(has_memoryless_optimal(g, uncertified), ValidationError);
}

TEST_CASE("parallel candidate evaluation never changes results") {
  Rng rng(2468);
  for (int trial = 0; trial < 8; ++trial) {
    RandomGameSpec spec;
    spec.min_states = 3;
    spec.max_states = 3;
    spec.max_reward = 2;
    spec.priorities = true;
    spec.max_priority = 2;
    GameGraph g = random_game(rng, spec);
    LmppOptions serial;
    serial.memory_cap = 2;
    serial.enumeration_budget = 400;
    LmppOptions parallel = serial;
    parallel.jobs = 4;
    CertifiedSolution a = solve_lmpp(g, serial);
    CertifiedSolution b = solve_lmpp(g, parallel);
    CHECK(a.values == b.values);
    CHECK(a.certified == b.certified);
    CHECK(a.p1_value == b.p1_value);
    CHECK(a.p2_value == b.p2_value);
  }
}

TEST_CASE("cap exhaustion is flagged, never silent") {
  GameGraph g = fig5();
  LmppOptions opt;
  opt.max_template_k = 2;  // too small to certify value 10
  opt.memory_cap = 1;
  CertifiedSolution sol = solve_lmpp(g, opt);
  CHECK(!sol.certified);
  CHECK(sol.cap_exhausted);
  CHECK(sol.values[0] == lv1(10));  // upper side still sound
  CHECK(!sol.gap[0].zero());

  CHECK_THROWS_AS(epsilon_optimal_strategy(g, {rat(1, 100)}, opt),
                  ResourceCapError);
}
