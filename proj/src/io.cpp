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

#include "lexsynt/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lexsynt {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      if (line[i] == '#') break;  // comment to end of line
      size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
             line[j] != '\r')
        ++j;
      toks.push_back(Token{std::string(line.substr(i, j - i)), line_no,
                           static_cast<int>(i + 1)});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.col, msg + " (got '" + t.text + "')");
}

std::vector<std::string> name_list(const std::vector<Token>& toks, size_t from) {
  std::vector<std::string> names;
  for (size_t i = from; i < toks.size(); ++i) names.push_back(toks[i].text);
  return names;
}

Int parse_int(const Token& t) {
  const std::string& s = t.text;
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) fail(t, "expected an integer");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') fail(t, "expected an integer");
  return Int(s);
}

Rational parse_rational_str(const std::string& s, const Token& at) {
  size_t slash = s.find('/');
  auto check_int = [&](std::string_view v) {
    size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) fail(at, "expected a rational");
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') fail(at, "expected a rational");
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Int(s));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  check_int(n);
  check_int(d);
  Int den(d);
  if (den == 0) fail(at, "zero denominator");
  return make_rational(Int(n), den);
}

// "(a,b,...)" -> items; "()" -> empty
std::vector<std::string> split_tuple(const Token& t) {
  const std::string& s = t.text;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    fail(t, "expected a parenthesized tuple");
  std::vector<std::string> items;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return items;
  size_t pos = 0;
  while (true) {
    size_t comma = body.find(',', pos);
    if (comma == std::string::npos) {
      items.push_back(body.substr(pos));
      break;
    }
    items.push_back(body.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return items;
}

RewardVec parse_reward(const Token& t, size_t dim) {
  std::vector<std::string> items = split_tuple(t);
  if (items.size() != dim)
    fail(t, "expected " + std::to_string(dim) + " reward components");
  RewardVec r;
  for (const std::string& it : items) {
    for (char c : it)
      if (c < '0' || c > '9') fail(t, "rewards are natural numbers");
    if (it.empty()) fail(t, "rewards are natural numbers");
    r.emplace_back(it);
  }
  return r;
}

// "{r,-g,*h}" -> per-signal polarity: 1 set, 0 cleared, 2 both
std::vector<int> parse_letter_body(const Token& t, const Alphabet& a,
                                   bool allow_wildcard, bool total) {
  const std::string& s = t.text;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    fail(t, "expected a letter like {r,-g}");
  std::vector<int> polarity(a.size(), -1);
  std::string body = s.substr(1, s.size() - 2);
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    std::string item = comma == std::string::npos
                           ? body.substr(pos)
                           : body.substr(pos, comma - pos);
    int mode = 1;
    if (!item.empty() && item[0] == '-') {
      mode = 0;
      item = item.substr(1);
    } else if (!item.empty() && item[0] == '*') {
      if (!allow_wildcard) fail(t, "wildcard '*' is not allowed here");
      mode = 2;
      item = item.substr(1);
    }
    auto idx = a.index_of(item);
    if (!idx) fail(t, "unknown signal '" + item + "'");
    if (polarity[*idx] != -1) fail(t, "signal '" + item + "' listed twice");
    polarity[*idx] = mode;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (polarity[i] == -1) {
      if (total)
        fail(t, "letter does not assign signal '" + a.signal(i) + "'");
      polarity[i] = 0;  // word letters: unmentioned means false
    }
  }
  return polarity;
}

std::vector<Letter> expand_letters(const std::vector<int>& polarity) {
  std::vector<Letter> letters{Letter{0}};
  for (size_t i = 0; i < polarity.size(); ++i) {
    if (polarity[i] == 1) {
      for (Letter& l : letters) l.bits |= 1u << i;
    } else if (polarity[i] == 2) {
      size_t count = letters.size();
      for (size_t k = 0; k < count; ++k)
        letters.push_back(Letter{letters[k].bits | (1u << i)});
    }
  }
  return letters;
}

struct HeaderInfo {
  std::vector<std::string> inputs, outputs, signals;
  size_t dim = 0;
  bool parity = false;
  bool has_dim = false, has_parity = false;
  size_t body_start = 0;
};

HeaderInfo parse_header(const std::vector<std::vector<Token>>& lines,
                        const char* magic, bool io_required, bool want_dim) {
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  const auto& first = lines[0];
  if (first[0].text != magic || first.size() != 2 || first[1].text != "v1")
    fail(first[0], std::string("expected header '") + magic + " v1'");
  HeaderInfo h;
  size_t i = 1;
  for (; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    const std::string& kw = toks[0].text;
    if (kw == "inputs") {
      h.inputs = name_list(toks, 1);
    } else if (kw == "outputs") {
      h.outputs = name_list(toks, 1);
    } else if (kw == "signals") {
      h.signals = name_list(toks, 1);
    } else if (kw == "dim") {
      if (toks.size() != 2) fail(toks[0], "dim takes one number");
      h.dim = static_cast<size_t>(parse_int(toks[1]).convert_to<long>());
      h.has_dim = true;
    } else if (kw == "parity") {
      if (toks.size() != 2 || (toks[1].text != "on" && toks[1].text != "off"))
        fail(toks[0], "parity takes on|off");
      h.parity = toks[1].text == "on";
      h.has_parity = true;
    } else {
      break;
    }
  }
  h.body_start = i;
  if (want_dim && !h.has_dim) fail(lines[0][0], "missing 'dim' line");
  if (want_dim && !h.has_parity) fail(lines[0][0], "missing 'parity' line");
  if (io_required && h.inputs.empty() && h.outputs.empty())
    fail(lines[0][0], "missing 'inputs'/'outputs' lines");
  return h;
}

class StateNames {
 public:
  StateId get(const Token& t) const {
    auto it = ids_.find(t.text);
    if (it == ids_.end())
      throw ValidationError("dangling state reference '" + t.text + "'");
    return it->second;
  }
  void put(const Token& t, StateId id) {
    if (!ids_.emplace(t.text, id).second)
      throw ValidationError("state '" + t.text + "' declared twice");
  }

 private:
  std::map<std::string, StateId> ids_;
};

}  // namespace

QuantAutomaton parse_qa(std::string_view text) {
  auto lines = tokenize(text);
  HeaderInfo h = parse_header(lines, "qa", true, true);
  QuantAutomaton a(h.inputs, h.outputs, h.dim, h.parity);
  StateNames names;
  bool saw_init = false;
  for (size_t i = h.body_start; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    const std::string& kw = toks[0].text;
    if (kw == "state") {
      if (toks.size() < 2) fail(toks[0], "state takes a name");
      bool init = false;
      std::optional<int> prio;
      for (size_t j = 2; j < toks.size(); ++j) {
        if (toks[j].text == "init") {
          init = true;
        } else if (toks[j].text == "prio") {
          if (++j == toks.size()) fail(toks[j - 1], "prio takes a number");
          prio = static_cast<int>(parse_int(toks[j]).convert_to<long>());
        } else {
          fail(toks[j], "unknown state attribute");
        }
      }
      StateId id = a.add_state(toks[1].text, prio);
      names.put(toks[1], id);
      if (init) {
        a.set_initial(id);
        saw_init = true;
      }
    } else if (kw == "edge") {
      if (toks.size() != 5)
        fail(toks[0], "edge takes: src dst {letter} (rewards)");
      StateId src = names.get(toks[1]);
      StateId dst = names.get(toks[2]);
      auto polarity = parse_letter_body(toks[3], a.alphabet(), true, true);
      RewardVec reward = parse_reward(toks[4], h.dim);
      for (Letter l : expand_letters(polarity)) a.set_arrow(src, l, dst, reward);
    } else {
      fail(toks[0], "unknown directive");
    }
  }
  if (!saw_init) throw ValidationError("no state marked init");
  a.validate();
  return a;
}

GameGraph parse_game(std::string_view text) {
  auto lines = tokenize(text);
  HeaderInfo h = parse_header(lines, "game", false, true);
  std::vector<std::string> signals = h.inputs;
  signals.insert(signals.end(), h.outputs.begin(), h.outputs.end());
  signals.insert(signals.end(), h.signals.begin(), h.signals.end());
  Alphabet alphabet(signals);

  GameGraph g;
  g.set_alphabet(alphabet);
  StateNames names;
  bool saw_init = false;
  for (size_t i = h.body_start; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    const std::string& kw = toks[0].text;
    if (kw == "state") {
      if (toks.size() < 3 || (toks[2].text != "p1" && toks[2].text != "p2"))
        fail(toks[0], "state takes: name p1|p2 [init] [prio n]");
      bool init = false;
      std::optional<int> prio;
      for (size_t j = 3; j < toks.size(); ++j) {
        if (toks[j].text == "init") {
          init = true;
        } else if (toks[j].text == "prio") {
          if (++j == toks.size()) fail(toks[j - 1], "prio takes a number");
          prio = static_cast<int>(parse_int(toks[j]).convert_to<long>());
        } else {
          fail(toks[j], "unknown state attribute");
        }
      }
      if (h.parity && !prio)
        throw ValidationError("state " + toks[1].text +
                              " needs a priority (parity on)");
      if (!h.parity && prio)
        throw ValidationError("state " + toks[1].text +
                              " has a priority (parity off)");
      StateId id = g.add_state(
          toks[1].text, toks[2].text == "p1" ? Player::P1 : Player::P2, prio);
      names.put(toks[1], id);
      if (init) {
        g.set_initial(id);
        saw_init = true;
      }
    } else if (kw == "edge") {
      if (toks.size() != 4 && toks.size() != 5)
        fail(toks[0], "edge takes: src dst [{letter}] (rewards)");
      StateId src = names.get(toks[1]);
      StateId dst = names.get(toks[2]);
      if (toks.size() == 5) {
        auto polarity = parse_letter_body(toks[3], alphabet, true, true);
        RewardVec reward = parse_reward(toks[4], h.dim);
        for (Letter l : expand_letters(polarity))
          g.add_edge(src, dst, reward, l);
      } else {
        g.add_edge(src, dst, parse_reward(toks[3], h.dim));
      }
    } else {
      fail(toks[0], "unknown directive");
    }
  }
  if (!saw_init) throw ValidationError("no state marked init");
  g.validate();
  return g;
}

MealyMachine parse_mealy(std::string_view text) {
  auto lines = tokenize(text);
  HeaderInfo h = parse_header(lines, "mealy", true, false);
  MealyMachine m(h.inputs, h.outputs);
  StateNames names;
  bool saw_init = false;
  for (size_t i = h.body_start; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    const std::string& kw = toks[0].text;
    if (kw == "state") {
      if (toks.size() < 2) fail(toks[0], "state takes a name");
      bool init = false;
      for (size_t j = 2; j < toks.size(); ++j) {
        if (toks[j].text == "init")
          init = true;
        else
          fail(toks[j], "unknown state attribute");
      }
      StateId id = m.add_state(toks[1].text);
      names.put(toks[1], id);
      if (init) {
        m.set_initial(id);
        saw_init = true;
      }
    } else if (kw == "trans") {
      if (toks.size() != 6 || toks[3].text != "->")
        fail(toks[0], "trans takes: src {in} -> {out} dst");
      StateId src = names.get(toks[1]);
      StateId dst = names.get(toks[5]);
      auto in_pol = parse_letter_body(toks[2], m.input_alphabet(), true, true);
      auto out_pol =
          parse_letter_body(toks[4], m.output_alphabet(), false, true);
      Letter out = expand_letters(out_pol)[0];
      for (Letter in : expand_letters(in_pol))
        m.set_transition(src, in, out, dst);
    } else {
      fail(toks[0], "unknown directive");
    }
  }
  if (!saw_init) throw ValidationError("no state marked init");
  m.validate();
  return m;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  auto lines = tokenize(text);
  std::vector<Token> toks;
  for (auto& l : lines) toks.insert(toks.end(), l.begin(), l.end());
  Word w;
  bool in_cycle = false;
  for (const Token& t : toks) {
    if (t.text == "|") {
      if (in_cycle) fail(t, "more than one '|' in word");
      in_cycle = true;
      continue;
    }
    auto polarity = parse_letter_body(t, alphabet, false, false);
    Letter l = expand_letters(polarity)[0];
    (in_cycle ? w.cycle : w.prefix).push_back(l);
  }
  if (!in_cycle) throw ParseError(1, 1, "word needs a '|' before the cycle");
  if (w.cycle.empty()) throw ParseError(1, 1, "word cycle is empty");
  return w;
}

std::vector<Rational> parse_rational_vector(std::string_view text) {
  Token t{std::string(text), 1, 1};
  std::vector<Rational> v;
  for (const std::string& item : split_tuple(t))
    v.push_back(parse_rational_str(item, t));
  return v;
}

namespace {

std::string reward_str(const RewardVec& r) {
  std::string s = "(";
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += r[i].str();
  }
  return s + ")";
}

std::string signal_line(const char* kw, const std::vector<std::string>& names) {
  std::string s = kw;
  for (const auto& n : names) s += " " + n;
  return s + "\n";
}

}  // namespace

std::string serialize_qa(const QuantAutomaton& a) {
  a.validate();
  std::string s = "qa v1\n";
  s += signal_line("inputs", a.inputs());
  s += signal_line("outputs", a.outputs());
  s += "dim " + std::to_string(a.dim()) + "\n";
  s += std::string("parity ") + (a.parity() ? "on" : "off") + "\n";
  for (StateId st = 0; st < a.num_states(); ++st) {
    s += "state " + a.name(st);
    if (st == a.initial()) s += " init";
    if (a.priority(st)) s += " prio " + std::to_string(*a.priority(st));
    s += "\n";
  }
  for (StateId st = 0; st < a.num_states(); ++st)
    for (std::uint32_t b = 0; b < a.alphabet().letter_count(); ++b) {
      const auto& arrow = a.arrow(st, Letter{b});
      s += "edge " + a.name(st) + " " + a.name(arrow.dst) + " " +
           format_letter(a.alphabet(), Letter{b}) + " " +
           reward_str(arrow.reward) + "\n";
    }
  return s;
}

std::string serialize_game(const GameGraph& g) {
  g.validate();
  std::string s = "game v1\n";
  if (g.alphabet().size() > 0)
    s += signal_line("signals", g.alphabet().signals());
  s += "dim " + std::to_string(g.dimension()) + "\n";
  s += std::string("parity ") + (g.has_priorities() ? "on" : "off") + "\n";
  for (StateId st = 0; st < g.num_states(); ++st) {
    s += "state " + g.name(st);
    s += g.owner(st) == Player::P1 ? " p1" : " p2";
    if (st == g.initial()) s += " init";
    if (g.priority(st)) s += " prio " + std::to_string(*g.priority(st));
    s += "\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    s += "edge " + g.name(ed.src) + " " + g.name(ed.dst);
    if (ed.label) s += " " + format_letter(g.alphabet(), *ed.label);
    s += " " + reward_str(ed.reward) + "\n";
  }
  return s;
}

std::string serialize_mealy(const MealyMachine& m) {
  m.validate();
  std::string s = "mealy v1\n";
  s += signal_line("inputs", m.inputs());
  s += signal_line("outputs", m.outputs());
  for (StateId st = 0; st < m.num_states(); ++st) {
    s += "state " + m.name(st);
    if (st == m.initial()) s += " init";
    s += "\n";
  }
  for (StateId st = 0; st < m.num_states(); ++st)
    for (std::uint32_t b = 0; b < m.input_alphabet().letter_count(); ++b) {
      const auto& tr = m.transition(st, Letter{b});
      s += "trans " + m.name(st) + " " +
           format_letter(m.input_alphabet(), Letter{b}) + " -> " +
           format_letter(m.output_alphabet(), tr.out) + " " + m.name(tr.dst) +
           "\n";
    }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << contents;
}

}  // namespace lexsynt
