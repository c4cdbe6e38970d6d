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

#include "lexsynt/lmpp.hpp"

#include <algorithm>
#include <future>

namespace lexsynt {

FiniteMemoryStrategy three_phase_strategy(const GameGraph& g,
                                          const MemorylessStrategy& mp_strat,
                                          const AttractorResult& attr,
                                          const std::vector<bool>& target,
                                          int k) {
  if (k <= 0) throw ValidationError("three_phase_strategy: k must be positive");
  const size_t n = g.num_states();
  for (StateId s = 0; s < n; ++s)
    if (!target[s] && !attr.set[s])
      throw ValidationError(
          "three_phase_strategy: attractor target not forcibly reachable from " +
          g.name(s));
  validate_strategy(g, mp_strat, Player::P1);

  // Memory 0..k counts mp moves; k+1 is the attractor phase.  Entering a
  // target state during the attractor phase starts the next round.
  const std::uint32_t kk = static_cast<std::uint32_t>(k);
  const std::uint32_t attr_mem = kk + 1;
  FiniteMemoryStrategy s;
  s.memory_count = kk + 2;
  s.initial_memory = 0;
  s.update.assign(s.memory_count, std::vector<std::uint32_t>(n));
  s.moves.assign(s.memory_count, std::vector<std::optional<EdgeId>>(n));
  for (std::uint32_t m = 0; m < s.memory_count; ++m) {
    for (StateId t = 0; t < n; ++t) {
      if (m < kk)
        s.update[m][t] = m + 1;
      else
        s.update[m][t] = target[t] ? 0 : attr_mem;
      if (g.owner(t) != Player::P1) continue;
      if (m <= kk)
        s.moves[m][t] = mp_strat.moves[t];
      else if (!target[t])
        s.moves[m][t] = attr.strategy.moves[t];
      // (attr_mem, target state) combinations are unreachable
    }
  }
  return s;
}

namespace {

using Vals = std::vector<LexValue>;

// Odometer over the owned states' out-edges.
class MemorylessEnum {
 public:
  MemorylessEnum(const GameGraph& g, Player p) : g_(g) {
    for (StateId s = 0; s < g.num_states(); ++s)
      if (g.owner(s) == p) owned_.push_back(s);
    idx_.assign(owned_.size(), 0);
  }

  std::uint64_t count(std::uint64_t cap) const {
    std::uint64_t c = 1;
    for (StateId s : owned_) {
      c *= g_.out(s).size();
      if (c > cap) return cap + 1;
    }
    return c;
  }

  std::optional<MemorylessStrategy> next() {
    if (done_) return std::nullopt;
    MemorylessStrategy m;
    m.moves.assign(g_.num_states(), std::nullopt);
    for (size_t i = 0; i < owned_.size(); ++i)
      m.moves[owned_[i]] = g_.out(owned_[i])[idx_[i]];
    size_t i = 0;
    for (; i < owned_.size(); ++i) {
      if (++idx_[i] < g_.out(owned_[i]).size()) break;
      idx_[i] = 0;
    }
    if (i == owned_.size()) done_ = true;
    return m;
  }

 private:
  const GameGraph& g_;
  std::vector<StateId> owned_;
  std::vector<size_t> idx_;
  bool done_ = false;
};

// Modular step-counter machines: memory is a clock mod c advanced on every
// observed state; moves depend on (clock, state).
class CounterEnum {
 public:
  CounterEnum(const GameGraph& g, Player p, std::uint32_t c) : g_(g), c_(c) {
    for (StateId s = 0; s < g.num_states(); ++s)
      if (g.owner(s) == p) owned_.push_back(s);
    idx_.assign(owned_.size() * c_, 0);
  }

  std::uint64_t count(std::uint64_t cap) const {
    std::uint64_t n = 1;
    for (StateId s : owned_)
      for (std::uint32_t m = 0; m < c_; ++m) {
        n *= g_.out(s).size();
        if (n > cap) return cap + 1;
      }
    return n;
  }

  std::optional<FiniteMemoryStrategy> next() {
    if (done_) return std::nullopt;
    FiniteMemoryStrategy f;
    f.memory_count = c_;
    f.initial_memory = 0;
    f.update.assign(c_, std::vector<std::uint32_t>(g_.num_states()));
    for (std::uint32_t m = 0; m < c_; ++m)
      for (StateId t = 0; t < g_.num_states(); ++t)
        f.update[m][t] = (m + 1) % c_;
    f.moves.assign(c_, std::vector<std::optional<EdgeId>>(g_.num_states()));
    for (size_t i = 0; i < owned_.size(); ++i)
      for (std::uint32_t m = 0; m < c_; ++m)
        f.moves[m][owned_[i]] = g_.out(owned_[i])[idx_[i * c_ + m]];
    size_t j = 0;
    for (; j < idx_.size(); ++j) {
      if (++idx_[j] < g_.out(owned_[j / c_]).size()) break;
      idx_[j] = 0;
    }
    if (j == idx_.size()) done_ = true;
    return f;
  }

 private:
  const GameGraph& g_;
  std::uint32_t c_;
  std::vector<StateId> owned_;
  std::vector<size_t> idx_;
  bool done_ = false;
};

enum class Mode { Solve, Epsilon, Target };

struct Engine {
  const GameGraph& sub;
  const LmppOptions& opt;
  Mode mode;
  std::vector<Rational> eps;
  LexValue target_cutoff;
  StateId init_ref = 0;

  size_t n = 0;
  Int grid;
  std::vector<std::optional<LexValue>> lower, upper;
  std::vector<bool> done;
  size_t done_count = 0;
  bool budget_hit = false;

  std::optional<FiniteMemoryStrategy> p1_best, p2_best;
  Vals p1_best_vals, p2_best_vals;
  std::optional<FiniteMemoryStrategy> mode_witness;
  Vals mode_witness_vals;

  Engine(const GameGraph& s, const LmppOptions& o, Mode m)
      : sub(s), opt(o), mode(m) {
    n = sub.num_states();
    grid = Int(n);
    lower.assign(n, std::nullopt);
    upper.assign(n, std::nullopt);
    done.assign(n, false);
  }

  bool finished() const {
    if (mode == Mode::Solve) return done_count == n;
    return mode_witness.has_value();
  }

  bool certified_pair(const LexValue& lo, const LexValue& up) const {
    if (lo == up) return true;
    if (lo.is_bottom() || up.is_bottom()) return false;
    const auto& l = lo.as_vec();
    const auto& u = up.as_vec();
    size_t i = 0;
    while (i < l.size() && l[i] == u[i]) ++i;
    if (i + 1 != l.size()) return false;  // only the last component may differ
    auto uniq = unique_rational_in(l[i], u[i], grid);
    return uniq && *uniq == u[i];
  }

  void recheck(StateId s) {
    if (done[s] || !lower[s] || !upper[s]) return;
    if (certified_pair(*lower[s], *upper[s])) {
      done[s] = true;
      ++done_count;
    }
  }

  static LexValue minus_eps(const LexValue& v, const std::vector<Rational>& eps) {
    if (v.is_bottom()) return v;
    std::vector<Rational> w = v.as_vec();
    for (size_t i = 0; i < w.size(); ++i) w[i] -= eps[i];
    return LexValue::vec(std::move(w));
  }

  void feed(Player p, const FiniteMemoryStrategy& s, const Vals& vals) {
    if (p == Player::P1) {
      for (StateId st = 0; st < n; ++st) {
        if (!lower[st] || lex_less(*lower[st], vals[st])) {
          lower[st] = vals[st];
          recheck(st);
        }
      }
      if (!p1_best || lex_less(p1_best_vals[init_ref], vals[init_ref])) {
        p1_best = s;
        p1_best_vals = vals;
      }
      if (mode == Mode::Epsilon && !mode_witness) {
        bool ok = true;
        for (StateId st = 0; st < n && ok; ++st) {
          if (!upper[st]) { ok = false; break; }
          if (upper[st]->is_bottom()) continue;
          ok = !vals[st].is_bottom() &&
               lex_compare(vals[st], minus_eps(*upper[st], eps)) ==
                   Ordering::Greater;
        }
        if (ok) {
          mode_witness = s;
          mode_witness_vals = vals;
        }
      }
      if (mode == Mode::Target && !mode_witness &&
          lex_leq(target_cutoff, vals[init_ref])) {
        mode_witness = s;
        mode_witness_vals = vals;
      }
    } else {
      for (StateId st = 0; st < n; ++st) {
        if (!upper[st] || lex_less(vals[st], *upper[st])) {
          upper[st] = vals[st];
          recheck(st);
        }
      }
      if (!p2_best || lex_less(vals[init_ref], p2_best_vals[init_ref])) {
        p2_best = s;
        p2_best_vals = vals;
      }
    }
  }

  template <typename NextFn>
  void run_family(Player p, NextFn&& gen) {
    if (opt.jobs <= 1) {
      while (!finished()) {
        opt.deadline.check("solve_lmpp");
        auto c = gen();
        if (!c) return;
        Vals vals = evaluate_strategy(sub, *c, p);
        feed(p, *c, vals);
      }
      return;
    }
    // Chunks of `jobs` candidates evaluated concurrently; results folded in
    // index order so the outcome matches the serial run.
    std::vector<FiniteMemoryStrategy> chunk;
    while (!finished()) {
      opt.deadline.check("solve_lmpp");
      chunk.clear();
      while (chunk.size() < opt.jobs) {
        auto c = gen();
        if (!c) break;
        chunk.push_back(std::move(*c));
      }
      if (chunk.empty()) return;
      std::vector<std::future<Vals>> futures;
      futures.reserve(chunk.size());
      for (size_t i = 0; i < chunk.size(); ++i) {
        const FiniteMemoryStrategy* cand = &chunk[i];
        futures.push_back(std::async(std::launch::async, [this, cand, p]() {
          return evaluate_strategy(sub, *cand, p);
        }));
      }
      for (size_t i = 0; i < chunk.size(); ++i) {
        Vals vals = futures[i].get();
        if (!finished()) feed(p, chunk[i], vals);
      }
    }
  }

  void run() {
    LexMpSolution mp = lex_mp_solve(sub, MpOptions{opt.deadline});
    WinningRegions regions = solve_parity(sub);  // all Player-1 here

    // Player-2 side first so the upper bracket exists before checks.
    {
      std::vector<FiniteMemoryStrategy> seeds{
          FiniteMemoryStrategy::from_memoryless(mp.p2, n)};
      size_t at = 0;
      run_family(Player::P2, [&]() -> std::optional<FiniteMemoryStrategy> {
        return at < seeds.size() ? std::optional(seeds[at++]) : std::nullopt;
      });
    }
    {
      MemorylessEnum en(sub, Player::P2);
      if (en.count(opt.enumeration_budget) > opt.enumeration_budget) {
        budget_hit = true;
      } else {
        run_family(Player::P2, [&]() -> std::optional<FiniteMemoryStrategy> {
          auto m = en.next();
          if (!m) return std::nullopt;
          return FiniteMemoryStrategy::from_memoryless(*m, n);
        });
      }
    }
    if (finished()) return;

    // Player-1 seeds: the scalarized-game optimum and the parity winner.
    {
      std::vector<FiniteMemoryStrategy> seeds{
          FiniteMemoryStrategy::from_memoryless(mp.p1, n),
          FiniteMemoryStrategy::from_memoryless(regions.strat1, n)};
      size_t at = 0;
      run_family(Player::P1, [&]() -> std::optional<FiniteMemoryStrategy> {
        return at < seeds.size() ? std::optional(seeds[at++]) : std::nullopt;
      });
    }
    {
      MemorylessEnum en(sub, Player::P1);
      if (en.count(opt.enumeration_budget) > opt.enumeration_budget) {
        budget_hit = true;
      } else {
        run_family(Player::P1, [&]() -> std::optional<FiniteMemoryStrategy> {
          auto m = en.next();
          if (!m) return std::nullopt;
          return FiniteMemoryStrategy::from_memoryless(*m, n);
        });
      }
    }
    if (finished()) return;

    // Three-phase template ladder over all usable even-priority anchors.
    struct Anchor {
      AttractorResult attr;
      std::vector<bool> target;
    };
    std::vector<Anchor> anchors;
    const int maxp = sub.max_priority();
    for (int q = 0; q <= maxp; q += 2) {
      std::vector<bool> target(n, false);
      bool any = false;
      for (StateId s = 0; s < n; ++s)
        if (*sub.priority(s) == q) target[s] = any = true;
      if (!any) continue;
      AttractorResult attr = attractor(sub, Player::P1, target);
      bool full = true;
      for (StateId s = 0; s < n; ++s)
        if (!attr.set[s]) full = false;
      if (full) anchors.push_back({std::move(attr), std::move(target)});
    }
    if (!anchors.empty()) {
      int k = 1;
      size_t anchor_at = 0;
      run_family(Player::P1, [&]() -> std::optional<FiniteMemoryStrategy> {
        while (k <= opt.max_template_k) {
          if (anchor_at == anchors.size()) {
            anchor_at = 0;
            k = k < 20 ? k + 1 : k * 2;
            continue;
          }
          const Anchor& a = anchors[anchor_at++];
          return three_phase_strategy(sub, mp.p1, a.attr, a.target, k);
        }
        return std::nullopt;
      });
    }
    if (finished()) return;

    // Exhaustive memory deepening with step-counter machines.
    for (int c = 2; c <= opt.memory_cap && !finished(); ++c) {
      for (Player p : {Player::P2, Player::P1}) {
        CounterEnum en(sub, p, static_cast<std::uint32_t>(c));
        if (en.count(opt.enumeration_budget) > opt.enumeration_budget) {
          budget_hit = true;
          continue;
        }
        run_family(p, [&]() { return en.next(); });
        if (finished()) break;
      }
    }
  }
};

// Total extension of a subgame strategy to the full graph.  States outside
// the subgame keep their memory and use `fallback`; undefined owned slots
// are filled with the fallback or the first outgoing edge.
FiniteMemoryStrategy extend_strategy(const FiniteMemoryStrategy& s,
                                     const Subgraph& sub, const GameGraph& g,
                                     Player owner,
                                     const MemorylessStrategy* fallback) {
  FiniteMemoryStrategy r;
  r.memory_count = s.memory_count;
  r.initial_memory = s.initial_memory;
  r.update.assign(r.memory_count, std::vector<std::uint32_t>(g.num_states()));
  r.moves.assign(r.memory_count,
                 std::vector<std::optional<EdgeId>>(g.num_states()));
  for (std::uint32_t m = 0; m < r.memory_count; ++m) {
    for (StateId t = 0; t < g.num_states(); ++t) {
      r.update[m][t] = sub.to_new[t] ? s.update[m][*sub.to_new[t]] : m;
      if (g.owner(t) != owner) continue;
      if (sub.to_new[t] && s.moves[m][*sub.to_new[t]]) {
        r.moves[m][t] = sub.edge_to_old[*s.moves[m][*sub.to_new[t]]];
      } else if (fallback && fallback->moves.size() > t && fallback->moves[t]) {
        r.moves[m][t] = *fallback->moves[t];
      } else {
        r.moves[m][t] = g.out(t)[0];
      }
    }
  }
  return r;
}

GapBound gap_between(const LexValue& lo, const LexValue& up) {
  GapBound gb;
  if (lo == up) return gb;
  if (lo.is_bottom() || up.is_bottom()) {
    gb.infinite = true;
    return gb;
  }
  const auto& l = lo.as_vec();
  const auto& u = up.as_vec();
  gb.dist.resize(l.size());
  for (size_t i = 0; i < l.size(); ++i) gb.dist[i] = u[i] - l[i];
  return gb;
}

CertifiedSolution fast_path_all_even(const GameGraph& g,
                                     const LmppOptions& opt) {
  LexMpSolution mp = lex_mp_solve(g, MpOptions{opt.deadline});
  CertifiedSolution sol;
  sol.values = mp.values;
  sol.gap.assign(g.num_states(), GapBound{});
  sol.certified = true;
  sol.p1_witness = FiniteMemoryStrategy::from_memoryless(mp.p1, g.num_states());
  sol.p2_witness = FiniteMemoryStrategy::from_memoryless(mp.p2, g.num_states());
  sol.p1_value = evaluate_strategy(g, sol.p1_witness, Player::P1);
  sol.p2_value = evaluate_strategy(g, sol.p2_witness, Player::P2);
  return sol;
}

struct SplitRun {
  WinningRegions regions;
  Subgraph sub;
  bool w1_empty = true;
};

SplitRun split_by_parity(const GameGraph& g) {
  SplitRun r;
  r.regions = solve_parity(g);
  for (StateId s = 0; s < g.num_states(); ++s)
    if (r.regions.w1[s]) r.w1_empty = false;
  if (!r.w1_empty) r.sub = induced_subgraph(g, r.regions.w1);
  return r;
}

MemorylessStrategy first_edge_everywhere(const GameGraph& g) {
  MemorylessStrategy m;
  m.moves.assign(g.num_states(), std::nullopt);
  for (StateId s = 0; s < g.num_states(); ++s) m.moves[s] = g.out(s)[0];
  return m;
}

}  // namespace

CertifiedSolution solve_lmpp(const GameGraph& g, const LmppOptions& opt) {
  g.validate();
  if (!g.has_priorities())
    throw ValidationError("solve_lmpp: priorities required");
  if (g.dimension() == 0)
    throw ValidationError("solve_lmpp: rewards required");

  bool all_even = true;
  for (StateId s = 0; s < g.num_states(); ++s)
    if (*g.priority(s) % 2 != 0) all_even = false;
  if (all_even) return fast_path_all_even(g, opt);

  SplitRun run = split_by_parity(g);
  CertifiedSolution sol;
  sol.values.assign(g.num_states(), LexValue::bottom());
  sol.gap.assign(g.num_states(), GapBound{});

  if (run.w1_empty) {
    sol.certified = true;
    sol.p1_witness =
        FiniteMemoryStrategy::from_memoryless(first_edge_everywhere(g),
                                              g.num_states());
    MemorylessStrategy p2 = run.regions.strat2;
    for (StateId s = 0; s < g.num_states(); ++s)
      if (g.owner(s) == Player::P2 && !p2.moves[s]) p2.moves[s] = g.out(s)[0];
    sol.p2_witness = FiniteMemoryStrategy::from_memoryless(p2, g.num_states());
    sol.p1_value = evaluate_strategy(g, sol.p1_witness, Player::P1);
    sol.p2_value = evaluate_strategy(g, sol.p2_witness, Player::P2);
    return sol;
  }

  Engine eng(run.sub.graph, opt, Mode::Solve);
  if (run.regions.w1[g.initial()])
    eng.init_ref = *run.sub.to_new[g.initial()];
  eng.run();

  sol.certified = true;
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (!run.regions.w1[s]) continue;  // Bottom, gap 0
    const StateId ns = *run.sub.to_new[s];
    sol.values[s] = *eng.upper[ns];
    if (!eng.done[ns]) {
      sol.gap[s] = gap_between(eng.lower[ns] ? *eng.lower[ns] : LexValue::bottom(),
                               *eng.upper[ns]);
      sol.certified = false;
    }
  }
  sol.cap_exhausted = !sol.certified;

  sol.p1_witness =
      extend_strategy(*eng.p1_best, run.sub, g, Player::P1, nullptr);
  sol.p2_witness =
      extend_strategy(*eng.p2_best, run.sub, g, Player::P2, &run.regions.strat2);
  sol.p1_value = evaluate_strategy(g, sol.p1_witness, Player::P1);
  sol.p2_value = evaluate_strategy(g, sol.p2_witness, Player::P2);
  return sol;
}

FiniteMemoryStrategy epsilon_optimal_strategy(const GameGraph& g,
                                              const std::vector<Rational>& eps,
                                              const LmppOptions& opt) {
  g.validate();
  if (!g.has_priorities())
    throw ValidationError("epsilon_optimal_strategy: priorities required");
  if (eps.size() != g.dimension())
    throw ValidationError("epsilon_optimal_strategy: epsilon dimension mismatch");
  for (const Rational& e : eps)
    if (e <= 0)
      throw ValidationError("epsilon_optimal_strategy: epsilon must be positive");

  bool all_even = true;
  for (StateId s = 0; s < g.num_states(); ++s)
    if (*g.priority(s) % 2 != 0) all_even = false;
  if (all_even) {
    LexMpSolution mp = lex_mp_solve(g, MpOptions{opt.deadline});
    return FiniteMemoryStrategy::from_memoryless(mp.p1, g.num_states());
  }

  SplitRun run = split_by_parity(g);
  if (run.w1_empty)
    return FiniteMemoryStrategy::from_memoryless(first_edge_everywhere(g),
                                                 g.num_states());

  Engine eng(run.sub.graph, opt, Mode::Epsilon);
  eng.eps = eps;
  if (run.regions.w1[g.initial()])
    eng.init_ref = *run.sub.to_new[g.initial()];
  eng.run();
  if (!eng.mode_witness)
    throw ResourceCapError(
        "epsilon_optimal_strategy: memory cap exceeded before reaching epsilon");
  return extend_strategy(*eng.mode_witness, run.sub, g, Player::P1, nullptr);
}

std::optional<FiniteMemoryStrategy> strategy_achieving(const GameGraph& g,
                                                       const LexValue& cutoff,
                                                       const LmppOptions& opt) {
  g.validate();
  if (!g.has_priorities())
    throw ValidationError("strategy_achieving: priorities required");

  SplitRun run = split_by_parity(g);
  if (cutoff.is_bottom())
    return FiniteMemoryStrategy::from_memoryless(first_edge_everywhere(g),
                                                 g.num_states());
  if (!run.regions.w1[g.initial()]) return std::nullopt;  // value is Bottom

  Engine eng(run.sub.graph, opt, Mode::Target);
  eng.target_cutoff = cutoff;
  eng.init_ref = *run.sub.to_new[g.initial()];
  eng.run();
  if (!eng.mode_witness) return std::nullopt;
  return extend_strategy(*eng.mode_witness, run.sub, g, Player::P1, nullptr);
}

std::optional<MemorylessStrategy> has_memoryless_optimal(
    const GameGraph& g, const CertifiedSolution& sol, const LmppOptions& opt) {
  if (!sol.certified)
    throw ValidationError("has_memoryless_optimal: uncertified value map");
  MemorylessEnum en(g, Player::P1);
  if (en.count(opt.enumeration_budget) > opt.enumeration_budget)
    throw ResourceCapError("has_memoryless_optimal: enumeration budget exceeded");
  while (auto m = en.next()) {
    opt.deadline.check("has_memoryless_optimal");
    Vals vals = evaluate_strategy(
        g, FiniteMemoryStrategy::from_memoryless(*m, g.num_states()),
        Player::P1);
    if (vals == sol.values) return m;
  }
  return std::nullopt;
}

}  // namespace lexsynt
