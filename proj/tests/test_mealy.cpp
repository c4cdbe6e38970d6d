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
#include "lexsynt/synth.hpp"

using namespace lexsynt;
using namespace testutil;

namespace {

Word random_input_word(Rng& rng, const Alphabet& in, size_t max_prefix,
                       size_t max_cycle) {
  Word w;
  const size_t np = rng.below(static_cast<std::uint32_t>(max_prefix + 1));
  const size_t nc = 1 + rng.below(static_cast<std::uint32_t>(max_cycle));
  for (size_t i = 0; i < np; ++i)
    w.prefix.push_back(Letter{rng.below(in.letter_count())});
  for (size_t i = 0; i < nc; ++i)
    w.cycle.push_back(Letter{rng.below(in.letter_count())});
  return w;
}

}  // namespace

TEST_CASE("the product of A1 with the lazy machine exposes the r-flood") {
  QuantAutomaton a1 = load_qa("A1.qa");
  MealyMachine m3 = load_mealy("M3.mealy");
  GameGraph prod = spec_product(a1, m3);
  CHECK(prod.num_states() == 2);
  CHECK(prod.num_edges() == 4);
  VerifyResult r = verify_value(a1, m3);
  CHECK(r.value == lv1(1, 2));
  // worst case: requests forever, the machine alternates its two states
  CHECK(r.witness.cycle.size() == 2);
}

TEST_CASE("a single-state machine restricts the automaton to its outputs") {
  QuantAutomaton a2 = load_qa("A2.qa");
  MealyMachine m1 = load_mealy("M1.mealy");
  GameGraph prod = spec_product(a2, m1);
  // always granting keeps A2 in its initial state
  CHECK(prod.num_states() == 1);
  CHECK(prod.num_edges() == 2);
}

TEST_CASE("the product of C with the synthesized machine is the 2-cycle") {
  GameGraph prod = spec_product(load_qa("C.qa"), load_mealy("Mfig6.mealy"));
  CHECK(prod.num_states() == 1);
  for (EdgeId e = 0; e < prod.num_edges(); ++e)
    CHECK(prod.edge(e).reward[0] == 2);
  VerifyResult r = verify_value(load_qa("C.qa"), load_mealy("Mfig6.mealy"));
  CHECK(r.value == lv1(2));
}

TEST_CASE("alphabet mismatches are rejected") {
  CHECK_THROWS_AS(spec_product(load_qa("A3.qa"), load_mealy("M1.mealy")),
                  ValidationError);
}

TEST_CASE("verify_value is a lower bound on every input word") {
  Rng rng(808080);
  QuantAutomaton a2 = load_qa("A2.qa");
  for (const char* name : {"M1.mealy", "M2.mealy", "M3.mealy"}) {
    MealyMachine m = load_mealy(name);
    const LexValue v = verify_value(a2, m).value;
    for (int trial = 0; trial < 100; ++trial) {
      Word in = random_input_word(rng, m.input_alphabet(), 3, 4);
      CHECK(lex_leq(v, eval_word(a2, m.io_word(in))));
    }
  }
}

TEST_CASE("the returned witness attains the value exactly") {
  QuantAutomaton phi = load_qa("phiA1.qa");
  for (const char* name : {"M1.mealy", "M2.mealy", "M3.mealy", "Mfig6.mealy"}) {
    MealyMachine m = load_mealy(name);
    VerifyResult r = verify_value(phi, m);
    CHECK(lasso_mpp_payoff(r.product, r.witness) == r.value);
  }
  QuantAutomaton a1 = load_qa("A1.qa");
  for (const char* name : {"M1.mealy", "M2.mealy", "M3.mealy"}) {
    MealyMachine m = load_mealy(name);
    VerifyResult r = verify_value(a1, m);
    CHECK(LexValue::vec(lasso_mean(r.product, r.witness)) == r.value);
  }
}

TEST_CASE("no machine beats the synthesis game") {
  for (const char* spec : {"A1.qa", "A2.qa", "C.qa"}) {
    QuantAutomaton a = load_qa(spec);
    const LexValue game = synthesize(a).value;
    for (const char* name : {"M1.mealy", "M2.mealy", "M3.mealy", "Mfig6.mealy"}) {
      MealyMachine m = load_mealy(name);
      CHECK(lex_leq(verify_value(a, m).value, game));
    }
  }
}

TEST_CASE("io_word unrolls prefix and cycle consistently") {
  MealyMachine m3 = load_mealy("M3.mealy");
  Word in;
  in.prefix = {Letter{1}};          // r
  in.cycle = {Letter{1}, Letter{0}};  // r, -r
  Word io = m3.io_word(in);
  REQUIRE(!io.cycle.empty());
  // joint alphabet is (r, g); machine emits -g, then g on the next step
  CHECK(io.prefix[0].bits == 1);  // r, no grant yet
}
