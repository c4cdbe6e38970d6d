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

#include <string>
#include <string_view>

#include "lexsynt/automata.hpp"
#include "lexsynt/graph.hpp"
#include "lexsynt/mealy.hpp"

// Line-oriented text formats.
//
// .qa:    qa v1 / inputs <names> / outputs <names> / dim <d> / parity on|off
//         state <id> [init] [prio <n>]
//         edge <src> <dst> {<letter>} (<r1,...,rd>)
// .game:  game v1 / [inputs] / [outputs] / dim <d> / parity on|off
//         state <id> p1|p2 [init] [prio <n>]
//         edge <src> <dst> [{<letter>}] (<r1,...,rd>)
// .mealy: mealy v1 / inputs <names> / outputs <names>
//         state <id> [init]
//         trans <src> {<in>} -> {<out>} <dst>
//
// Edge letters list every declared signal as `name`, `-name` or `*name`
// (both polarities, expanded at parse time).  Word letters list set
// signals (`name`) and optionally cleared ones (`-name`); unmentioned
// signals are false, so {} is the all-false letter.

namespace lexsynt {

QuantAutomaton parse_qa(std::string_view text);
GameGraph parse_game(std::string_view text);
MealyMachine parse_mealy(std::string_view text);

// "p1 p2 | c1 c2": prefix letters before '|', cycle letters after.
Word parse_word(std::string_view text, const Alphabet& alphabet);

// "(1,1/2)"
std::vector<Rational> parse_rational_vector(std::string_view text);

std::string serialize_qa(const QuantAutomaton& a);
std::string serialize_game(const GameGraph& g);
std::string serialize_mealy(const MealyMachine& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace lexsynt
