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

// Seeded generators of random instances. The same seed yields the same
// sequence of instances on every run.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orda/core.hpp"
#include "orda/languages.hpp"
#include "orda/regex.hpp"

namespace orda {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// The first k letters of "abcdefgh…".
inline Alphabet first_letters(std::size_t k) {
  return Alphabet(std::string("abcdefghijklmnopqrstuvwxyz").substr(0, k));
}

inline Semiautomaton random_semiautomaton(Rng& rng, std::size_t states, const Alphabet& alphabet) {
  std::vector<State> delta(states * alphabet.size());
  for (auto& t : delta) t = uniform(rng, 0, states - 1);
  return Semiautomaton(states, alphabet, std::move(delta));
}

// Uniform transitions, each state final with probability 1/2, discrete order.
inline OrderedAutomaton random_dfa(Rng& rng, std::size_t max_states, std::size_t max_letters) {
  const std::size_t n = uniform(rng, 1, max_states);
  const Alphabet alphabet = first_letters(uniform(rng, 1, max_letters));
  auto sa = random_semiautomaton(rng, n, alphabet);
  std::vector<bool> fin(n);
  for (State q = 0; q < n; ++q) fin[q] = coin(rng);
  return OrderedAutomaton(discrete(sa), 0, std::move(fin));
}

// A random partial order compatible with the letter actions: pairs are drawn
// along a random linear extension, closed transitively, and the draw is
// rejected unless every letter is isotone. Falls back to the discrete order.
inline StateOrder random_compatible_order(Rng& rng, const Semiautomaton& sa,
                                          std::size_t attempts = 20) {
  const std::size_t n = sa.size();
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<State> line(n);
    std::iota(line.begin(), line.end(), State{0});
    std::shuffle(line.begin(), line.end(), rng);
    StateOrder le = Relation::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng, 0.3)) le.set(line[i], line[j], true);
    for (State k = 0; k < n; ++k)
      for (State i = 0; i < n; ++i)
        for (State j = 0; j < n; ++j)
          if (le(i, k) && le(k, j)) le.set(i, j, true);
    bool ok = true;
    for (State p = 0; p < n && ok; ++p)
      for (State q = 0; q < n && ok; ++q)
        if (le(p, q))
          for (std::size_t a = 0; a < sa.letters() && ok; ++a) ok = le(sa.next(p, a), sa.next(q, a));
    if (ok) return le;
  }
  return Relation::identity(n);
}

// Random ordered automaton whose final set is the upward closure of a random
// set of states.
inline OrderedAutomaton random_ordered_automaton(Rng& rng, std::size_t max_states,
                                                 std::size_t max_letters) {
  const std::size_t n = uniform(rng, 1, max_states);
  const Alphabet alphabet = first_letters(uniform(rng, 1, max_letters));
  auto sa = random_semiautomaton(rng, n, alphabet);
  auto le = random_compatible_order(rng, sa);
  std::vector<bool> fin(n, false);
  for (State q = 0; q < n; ++q)
    if (coin(rng, 0.3))
      for (State r = 0; r < n; ++r)
        if (le(q, r)) fin[r] = true;
  return OrderedAutomaton(OrderedSemiautomaton(std::move(sa), std::move(le)), 0, std::move(fin));
}

inline Regex random_regex(Rng& rng, const Alphabet& alphabet, std::size_t depth) {
  if (depth == 0 || coin(rng, 0.25)) {
    std::size_t pick = uniform(rng, 0, alphabet.size() + 1);
    if (pick == alphabet.size()) return Regex::epsilon();
    if (pick == alphabet.size() + 1) return Regex::any_word();
    return Regex::symbol(alphabet.symbol(pick));
  }
  switch (uniform(rng, 0, 5)) {
    case 0:
    case 1:
      return Regex::concat_of({random_regex(rng, alphabet, depth - 1),
                               random_regex(rng, alphabet, depth - 1)});
    case 2:
      return Regex::union_of({random_regex(rng, alphabet, depth - 1),
                              random_regex(rng, alphabet, depth - 1)});
    case 3:
      return Regex::intersection_of({random_regex(rng, alphabet, depth - 1),
                                     random_regex(rng, alphabet, depth - 1)});
    case 4:
      return Regex::star(random_regex(rng, alphabet, depth - 1));
    default:
      return Regex::complement(random_regex(rng, alphabet, depth - 1));
  }
}

inline Regex word_regex(const Word& w) {
  std::vector<Regex> parts;
  for (Symbol s : w) parts.push_back(Regex::symbol(s));
  return Regex::concat_of(std::move(parts));
}

inline Regex finite_language_regex(const std::vector<Word>& words) {
  std::vector<Regex> parts;
  for (const auto& w : words) parts.push_back(word_regex(w));
  return Regex::union_of(std::move(parts));
}

// Up to max_words distinct words of length ≤ max_len.
inline std::vector<Word> random_finite_language(Rng& rng, const Alphabet& alphabet,
                                                std::size_t max_words, std::size_t max_len) {
  std::set<Word> words;
  const std::size_t count = uniform(rng, 1, max_words);
  for (std::size_t i = 0; i < count; ++i) {
    Word w;
    for (std::size_t len = uniform(rng, 0, max_len); len > 0; --len)
      w.push_back(alphabet.symbol(uniform(rng, 0, alphabet.size() - 1)));
    words.insert(w);
  }
  return {words.begin(), words.end()};
}

// F ∪ u₁A* ∪ … ∪ u_kA* for a random finite F and random prefixes u_i.
inline Regex random_prefix_testable_regex(Rng& rng, const Alphabet& alphabet,
                                          std::size_t max_words, std::size_t max_len) {
  std::vector<Regex> parts{finite_language_regex(random_finite_language(rng, alphabet, max_words, max_len))};
  for (std::size_t i = uniform(rng, 0, 3); i > 0; --i) {
    Word u;
    for (std::size_t len = uniform(rng, 0, max_len); len > 0; --len)
      u.push_back(alphabet.symbol(uniform(rng, 0, alphabet.size() - 1)));
    parts.push_back(Regex::concat_of({word_regex(u), Regex::any_word()}));
  }
  return Regex::union_of(std::move(parts));
}

}  // namespace orda
