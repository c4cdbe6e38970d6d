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

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "lexsynt/io.hpp"
#include "lexsynt/lexmp.hpp"
#include "lexsynt/lmpp.hpp"
#include "lexsynt/oracle.hpp"
#include "lexsynt/synth.hpp"

namespace {

using namespace lexsynt;

struct Common {
  int memory_cap = 8;
  double deadline_seconds = 0;
  unsigned jobs = 1;
  std::string out_file;
  bool witness = false;

  LmppOptions lmpp() const {
    LmppOptions o;
    o.memory_cap = memory_cap;
    o.jobs = jobs;
    if (deadline_seconds > 0)
      o.deadline = Deadline::after_seconds(deadline_seconds);
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--memory-cap", c.memory_cap, "strategy memory cap");
  cmd->add_option("--deadline-seconds", c.deadline_seconds,
                  "cooperative solve deadline");
  cmd->add_option("--jobs", c.jobs, "parallel candidate evaluations");
  cmd->add_option("--out", c.out_file, "write machine or strategy here");
  cmd->add_flag("--witness", c.witness, "print a witness lasso");
}

std::string lasso_str(const GameGraph& g, const Lasso& l) {
  std::string s;
  StateId at = l.start;
  for (EdgeId e : l.prefix) {
    s += g.name(at) + " ";
    at = g.edge(e).dst;
  }
  s += "| ";
  for (EdgeId e : l.cycle) {
    s += g.name(g.edge(e).src);
    s += " ";
  }
  s.pop_back();
  return s;
}

std::string strategy_str(const GameGraph& g, const FiniteMemoryStrategy& s,
                         Player owner) {
  std::string out = "strategy memory " + std::to_string(s.memory_count) +
                    " initial " + std::to_string(s.initial_memory) + "\n";
  for (std::uint32_t m = 0; m < s.memory_count; ++m)
    for (StateId st = 0; st < g.num_states(); ++st) {
      if (g.owner(st) != owner || !s.moves[m][st]) continue;
      out += "move " + std::to_string(m) + " " + g.name(st) + " -> " +
             g.name(g.edge(*s.moves[m][st]).dst) + "\n";
    }
  for (std::uint32_t m = 0; m < s.memory_count; ++m)
    for (StateId st = 0; st < g.num_states(); ++st)
      out += "update " + std::to_string(m) + " " + g.name(st) + " -> " +
             std::to_string(s.update[m][st]) + "\n";
  return out;
}

int run_eval(const std::string& spec_file, const std::string& word_str) {
  QuantAutomaton a = parse_qa(read_file(spec_file));
  Word w = parse_word(word_str, a.alphabet());
  std::cout << "value = " << to_string(eval_word(a, w)) << "\n";
  return 0;
}

int run_verify(const std::string& spec_file, const std::string& impl_file,
               const Common& c) {
  QuantAutomaton a = parse_qa(read_file(spec_file));
  MealyMachine m = parse_mealy(read_file(impl_file));
  VerifyResult r = verify_value(a, m);
  std::cout << "value = " << to_string(r.value) << "\n";
  if (c.witness)
    std::cout << "witness = " << lasso_str(r.product, r.witness) << "\n";
  return 0;
}

int run_solve(const std::string& game_file, const Common& c) {
  GameGraph g = parse_game(read_file(game_file));
  if (!g.has_priorities()) {
    LexMpSolution sol = lex_mp_solve(g, MpOptions{c.lmpp().deadline});
    for (StateId s = 0; s < g.num_states(); ++s)
      std::cout << "value[" << g.name(s) << "] = " << to_string(sol.values[s])
                << "\n";
    if (!c.out_file.empty())
      write_file(c.out_file,
                 strategy_str(g,
                              FiniteMemoryStrategy::from_memoryless(
                                  sol.p1, g.num_states()),
                              Player::P1));
    return 0;
  }
  CertifiedSolution sol = solve_lmpp(g, c.lmpp());
  for (StateId s = 0; s < g.num_states(); ++s) {
    std::cout << "value[" << g.name(s) << "] = " << to_string(sol.values[s])
              << "\n";
    if (!sol.gap[s].zero()) {
      std::cout << "gap[" << g.name(s) << "] = ";
      if (sol.gap[s].infinite)
        std::cout << "inf\n";
      else
        std::cout << to_string(LexValue::vec(sol.gap[s].dist)) << "\n";
    }
  }
  std::cout << "certified = " << (sol.certified ? "yes" : "no") << "\n";
  if (!c.out_file.empty())
    write_file(c.out_file, strategy_str(g, sol.p1_witness, Player::P1));
  if (!sol.certified)
    throw ResourceCapError("solve: memory cap exhausted before certification");
  return 0;
}

int run_synthesize(const std::string& spec_file, const std::string& eps_str,
                   const Common& c) {
  QuantAutomaton a = parse_qa(read_file(spec_file));
  std::optional<std::vector<Rational>> eps;
  if (!eps_str.empty()) eps = parse_rational_vector(eps_str);
  SynthesisResult r = synthesize(a, eps, c.lmpp());
  std::cout << "value = " << to_string(r.value) << "\n";
  std::cout << "exact = " << (r.exact ? "yes" : "no") << "\n";
  if (!c.out_file.empty())
    write_file(c.out_file, serialize_mealy(r.machine));
  else
    std::cout << serialize_mealy(r.machine);
  return 0;
}

int run_realizable(const std::string& spec_file, const std::string& cutoff_str,
                   const std::string& eps_str, const Common& c) {
  QuantAutomaton a = parse_qa(read_file(spec_file));
  LexValue cutoff = LexValue::vec(parse_rational_vector(cutoff_str));
  std::optional<std::vector<Rational>> eps;
  if (!eps_str.empty()) eps = parse_rational_vector(eps_str);
  RealizabilityVerdict v = classify_realizability(a, cutoff, eps, c.lmpp());
  std::cout << to_string(v.verdict) << "\n";
  if (!c.out_file.empty() && v.witness)
    write_file(c.out_file, serialize_mealy(*v.witness));
  return 0;
}

int run_oracle(const std::string& what, const std::string& game_file) {
  GameGraph g = parse_game(read_file(game_file));
  if (what == "cycles") {
    for (const auto& c : oracle::enumerate_cycles(g)) {
      std::cout << "cycle:";
      for (EdgeId e : c.edges) std::cout << " " << g.name(g.edge(e).src);
      std::cout << " mean=" << to_string(LexValue::vec(c.mean));
      if (c.min_priority) std::cout << " minprio=" << *c.min_priority;
      std::cout << "\n";
    }
    return 0;
  }
  if (what == "value") {
    auto vals = oracle::enumerate_memoryless_game_value(g);
    for (StateId s = 0; s < g.num_states(); ++s)
      std::cout << "value[" << g.name(s) << "] = " << to_string(vals[s])
                << "\n";
    return 0;
  }
  throw ValidationError("oracle: unknown query '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexicographic mean-payoff (parity) games: verification and synthesis"};
  app.require_subcommand(1);

  Common c;
  std::string spec_file, impl_file, game_file, word_str, eps_str, cutoff_str,
      oracle_what;

  CLI::App* eval = app.add_subcommand("eval", "value of a word under a spec");
  eval->add_option("--spec", spec_file, ".qa file")->required();
  eval->add_option("--word", word_str, "prefix | cycle")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "worst-case value of a machine");
  verify->add_option("--spec", spec_file, ".qa file")->required();
  verify->add_option("--impl", impl_file, ".mealy file")->required();
  add_common(verify, c);

  CLI::App* solve = app.add_subcommand("solve", "per-state game values");
  solve->add_option("--game", game_file, ".game file")->required();
  add_common(solve, c);

  CLI::App* synth =
      app.add_subcommand("synthesize", "optimal or eps-optimal machine");
  synth->add_option("--spec", spec_file, ".qa file")->required();
  synth->add_option("--epsilon", eps_str, "(e1,...,ed)");
  add_common(synth, c);

  CLI::App* realizable =
      app.add_subcommand("realizable", "classify realizability at a cutoff");
  realizable->add_option("--spec", spec_file, ".qa file")->required();
  realizable->add_option("--cutoff", cutoff_str, "(c1,...,cd)")->required();
  realizable->add_option("--epsilon", eps_str, "(e1,...,ed)");
  add_common(realizable, c);

  CLI::App* orc = app.add_subcommand("oracle", "brute-force debugging queries");
  orc->group("");  // hidden
  orc->add_option("what", oracle_what, "cycles|value")->required();
  orc->add_option("--game", game_file, ".game file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*eval) return run_eval(spec_file, word_str);
    if (*verify) return run_verify(spec_file, impl_file, c);
    if (*solve) return run_solve(game_file, c);
    if (*synth) return run_synthesize(spec_file, eps_str, c);
    if (*realizable) return run_realizable(spec_file, cutoff_str, eps_str, c);
    if (*orc) return run_oracle(oracle_what, game_file);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
