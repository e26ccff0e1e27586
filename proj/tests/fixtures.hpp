// Copyright 2026 The orda Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named test languages and semiautomata.

#pragma once

#include "orda/orda.hpp"

namespace orda::fixtures {

// A*aA* over {a,b}: two states, 0 < 1, 1 final and absorbing.
inline OrderedAutomaton contains_a() {
  return canonical_ordered_automaton(parse_regex("!#a!#"), Alphabet("ab"));
}

// (ab)*: states (ab)*, b(ab)*, ∅.
inline OrderedAutomaton abstar() {
  return canonical_ordered_automaton(parse_regex("(ab)*"), Alphabet("ab"));
}

// (aa)* over {a}: a 2-cycle.
inline OrderedAutomaton even_a() {
  return canonical_ordered_automaton(parse_regex("(aa)*"), Alphabet("a"));
}

// {ab, ba}.
inline OrderedAutomaton fin() {
  return canonical_ordered_automaton(parse_regex("ab|ba"), Alphabet("ab"));
}

// n-state Černý automaton: a is the cyclic shift, b sends 0 to 1 and fixes
// the rest. The 4-state instance has shortest reset word length 9.
inline Semiautomaton cerny(std::size_t n) {
  std::vector<State> delta;
  for (State q = 0; q < n; ++q) {
    delta.push_back((q + 1) % n);
    delta.push_back(q == 0 ? 1 : q);
  }
  return Semiautomaton(n, Alphabet("ab"), std::move(delta));
}

}  // namespace orda::fixtures
