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
#include "lexsynt/lexmp.hpp"
#include "lexsynt/oracle.hpp"

using namespace lexsynt;
using namespace testutil;

TEST_CASE("scalarization multipliers follow the reduction rule") {
  // |S| = 2, d = 2, max second component 3  =>  m1 = 2^2*3 + 1 = 13
  GameGraph g;
  g.add_state("a", Player::P1);
  g.add_state("b", Player::P2);
  g.add_edge(0, 1, {Int(1), Int(1)});
  g.add_edge(1, 0, {Int(0), Int(3)});
  g.set_initial(0);
  ScalarizedGame sg = scalarize(g);
  REQUIRE(sg.multipliers.size() == 2);
  CHECK(sg.multipliers[0] == 13);
  CHECK(sg.multipliers[1] == 1);
  CHECK(sg.weights[0] == 14);  // 13*1 + 1
  CHECK(sg.weights[1] == 3);

  GameGraph h;
  h.add_state("a", Player::P1);
  h.add_edge(0, 0, {Int(5)});
  h.set_initial(0);
  ScalarizedGame sh = scalarize(h);
  CHECK(sh.multipliers == std::vector<Int>{Int(1)});
  CHECK(sh.weights[0] == 5);  // d = 1 leaves rewards unchanged
}

TEST_CASE("extreme mean cycles with witnesses") {
  GameGraph loop;
  loop.add_state("s", Player::P1);
  loop.add_edge(0, 0, {Int(5)});
  loop.set_initial(0);
  std::vector<Int> w{Int(5)};
  CHECK(extreme_mean_cycle(loop, w, ExtremeMode::Min).mean == rat(5));

  GameGraph g;
  g.add_state("a", Player::P1);
  g.add_state("b", Player::P1);
  g.add_edge(0, 0, {Int(2)});
  g.add_edge(0, 1, {Int(0)});
  g.add_edge(1, 1, {Int(7)});
  g.set_initial(0);
  std::vector<Int> w2{Int(2), Int(0), Int(7)};
  auto lo = extreme_mean_cycle(g, w2, ExtremeMode::Min);
  auto hi = extreme_mean_cycle(g, w2, ExtremeMode::Max);
  CHECK(lo.mean == rat(2));
  CHECK(hi.mean == rat(7));
  // witnesses are lassos whose cycle mean is the reported extreme
  Int total(0);
  for (EdgeId e : hi.lasso.cycle) total += w2[e];
  CHECK(make_rational(total, Int(hi.lasso.cycle.size())) == hi.mean);
}

TEST_CASE("extreme mean cycle agrees with exhaustive enumeration") {
  Rng rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGameSpec spec;
    spec.min_states = 2;
    spec.max_states = 6;
    spec.max_reward = 5;
    GameGraph g = random_game(rng, spec);
    std::vector<Int> w;
    for (EdgeId e = 0; e < g.num_edges(); ++e) w.push_back(g.edge(e).reward[0]);
    auto cycles = oracle::enumerate_cycles(g);
    REQUIRE(!cycles.empty());
    Rational best_min = cycles[0].mean[0], best_max = cycles[0].mean[0];
    for (const auto& c : cycles) {
      best_min = std::min(best_min, c.mean[0]);
      best_max = std::max(best_max, c.mean[0]);
    }
    CHECK(extreme_mean_cycle(g, w, ExtremeMode::Min).mean == best_min);
    CHECK(extreme_mean_cycle(g, w, ExtremeMode::Max).mean == best_max);
  }
}

TEST_CASE("mean-payoff values of the synthesis game and simple loops") {
  GameGraph fig6 = load_game("fig6.game");
  ScalarizedGame sg = scalarize(fig6);
  auto vals = mp_values(fig6, sg.weights, Player::P1);
  CHECK(vals[fig6.initial()] == rat(2));

  GameGraph loop;
  loop.add_state("a", Player::P1);
  loop.add_state("b", Player::P1);
  loop.add_edge(0, 1, {Int(7)});
  loop.add_edge(1, 0, {Int(7)});
  loop.set_initial(0);
  ScalarizedGame sl = scalarize(loop);
  for (const Rational& v : mp_values(loop, sl.weights, Player::P1))
    CHECK(v == rat(7));
}

TEST_CASE("lex_mp_solve on the synthesis game finds the bold strategy") {
  GameGraph g = load_game("fig6.game");
  LexMpSolution sol = lex_mp_solve(g);
  CHECK(sol.values[g.initial()] == lv1(2));
  // the strategy grants on a pending request and stays quiet otherwise:
  // i0r takes its g-edge back to c0, i0n takes its not-g edge
  auto target_of = [&](const char* name) {
    for (StateId s = 0; s < g.num_states(); ++s)
      if (g.name(s) == name) return g.edge(sol.p1.at(s)).dst;
    FAIL("state not found");
    return StateId(0);
  };
  auto reward_of = [&](const char* name) {
    for (StateId s = 0; s < g.num_states(); ++s)
      if (g.name(s) == name) return g.edge(sol.p1.at(s)).reward[0];
    FAIL("state not found");
    return Int(0);
  };
  CHECK(g.name(target_of("i0r")) == "c0");
  CHECK(reward_of("i0r") == 4);  // the grant edge
  CHECK(g.name(target_of("i0n")) == "c0");
  CHECK(reward_of("i0n") == 4);  // the quiet edge
}

TEST_CASE("d=1 lexicographic solving is plain mean-payoff solving") {
  Rng rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    RandomGameSpec spec;
    GameGraph g = random_game(rng, spec);
    LexMpSolution sol = lex_mp_solve(g);
    ScalarizedGame sg = scalarize(g);
    auto mp = mp_values(g, sg.weights, Player::P1);
    for (StateId s = 0; s < g.num_states(); ++s)
      CHECK(sol.values[s] == LexValue::vec({mp[s]}));
  }
}

TEST_CASE("a lone maximizer picks the lexicographically better loop") {
  GameGraph g;
  g.add_state("a", Player::P1);
  g.add_state("b", Player::P1);
  g.add_edge(0, 0, {Int(1), Int(0)});
  g.add_edge(0, 1, {Int(1), Int(0)});
  g.add_edge(1, 1, {Int(1), Int(1)});
  g.set_initial(0);
  LexMpSolution sol = lex_mp_solve(g);
  CHECK(sol.values[0] == lv2(rat(1), rat(1)));
}

TEST_CASE("best response certifies the returned strategies") {
  GameGraph fig6 = load_game("fig6.game");
  LexMpSolution sol = lex_mp_solve(fig6);
  // fixing the machine's synthesis strategy yields the game value
  CHECK(best_response_value(fig6, sol.p1, Player::P1)[fig6.initial()] == lv1(2));

  GameGraph loop;
  loop.add_state("a", Player::P1);
  loop.add_edge(0, 0, {Int(3)});
  loop.set_initial(0);
  MemorylessStrategy only;
  only.moves = {EdgeId(0)};
  CHECK(best_response_value(loop, only, Player::P1)[0] == lv1(3));

  Rng rng(909);
  for (int trial = 0; trial < 30; ++trial) {
    RandomGameSpec spec;
    spec.dim = 1 + static_cast<int>(rng.below(2));
    GameGraph g = random_game(rng, spec);
    LexMpSolution s = lex_mp_solve(g);
    CHECK(best_response_value(g, s.p1, Player::P1) == s.values);
    CHECK(best_response_value(g, s.p2, Player::P2) == s.values);
  }
}

TEST_CASE("extracted strategies stay optimal against free opponents") {
  // The minimizer's tempting C->A edge is harmless against the extracted
  // maximizer (who never enters C) but loses against a free one.
  GameGraph g;
  g.add_state("A", Player::P1);
  g.add_state("B", Player::P1);
  g.add_state("C", Player::P2);
  g.add_state("D", Player::P1);
  g.add_edge(0, 1, {Int(0)});
  g.add_edge(0, 2, {Int(0)});
  g.add_edge(1, 0, {Int(2)});   // A-B cycle, mean 1
  g.add_edge(2, 0, {Int(10)});  // A-C cycle, mean 5
  g.add_edge(2, 3, {Int(0)});
  g.add_edge(3, 0, {Int(0)});   // A-C-D cycle, mean 0
  g.set_initial(0);
  LexMpSolution sol = lex_mp_solve(g);
  CHECK(sol.values[0] == lv1(1));
  CHECK(best_response_value(g, sol.p1, Player::P1) == sol.values);
  CHECK(best_response_value(g, sol.p2, Player::P2) == sol.values);
  CHECK(g.name(g.edge(sol.p2.at(2)).dst) == "D");
}

TEST_CASE("determinacy: role-swapped solves agree") {
  Rng rng(1001);
  for (int trial = 0; trial < 30; ++trial) {
    RandomGameSpec spec;
    spec.dim = 1 + static_cast<int>(rng.below(2));
    GameGraph g = random_game(rng, spec);
    CHECK(lex_mp_solve(g).values ==
          lex_mp_solve_directed(swap_owners(g), Player::P2).values);
  }
}
