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

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orda/core.hpp"
#include "orda/minimize.hpp"
#include "orda/regex.hpp"

namespace orda {

inline constexpr std::size_t kDefaultStateCap = 10000;

// Derivative DFA of r: states are the dissimilar derivatives reachable from r
// (numbered in discovery order), finals are the nullable ones. The order is
// discrete; similar-but-distinct states may still denote the same language.
inline OrderedAutomaton derivative_automaton(const Regex& r, const Alphabet& alphabet,
                                             std::size_t cap = kDefaultStateCap) {
  for (Symbol s : symbols_of(r)) alphabet.index(s);
  std::map<Regex, State> ids;
  std::vector<Regex> states{r};
  ids.emplace(r, 0);
  std::vector<State> delta;
  for (std::size_t head = 0; head < states.size(); ++head) {
    for (Symbol s : alphabet.symbols()) {
      Regex d = derivative(states[head], s);
      auto [it, inserted] = ids.emplace(d, states.size());
      if (inserted) {
        if (states.size() >= cap) {
          throw ResourceError("derivative automaton exceeds " + std::to_string(cap) +
                              " states");
        }
        states.push_back(d);
      }
      delta.push_back(it->second);
    }
  }
  std::vector<bool> fin(states.size());
  for (State q = 0; q < states.size(); ++q) fin[q] = nullable(states[q]);
  const std::size_t n = states.size();
  return OrderedAutomaton(
      OrderedSemiautomaton(Semiautomaton(n, alphabet, std::move(delta)), Relation::identity(n)),
      0, std::move(fin));
}

inline OrderedAutomaton canonical_ordered_automaton(const Regex& r, const Alphabet& alphabet,
                                                    std::size_t cap = kDefaultStateCap) {
  return minimize_ordered(derivative_automaton(r, alphabet, cap));
}

class Nfa {
 public:
  Nfa(std::size_t states, Alphabet alphabet)
      : n_(states), alphabet_(std::move(alphabet)), trans_(states * alphabet_.size()),
        initial_(states, false), final_(states, false) {}

  void add_transition(State from, Symbol s, State to) {
    if (from >= n_ || to >= n_) throw ValidationError("nfa state out of range");
    auto& dst = trans_[from * alphabet_.size() + alphabet_.index(s)];
    if (std::find(dst.begin(), dst.end(), to) == dst.end()) dst.push_back(to);
  }
  void set_initial(State q, bool v = true) { initial_.at(q) = v; }
  void set_final(State q, bool v = true) { final_.at(q) = v; }

  std::size_t size() const { return n_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<State>& targets(State q, std::size_t letter) const {
    return trans_[q * alphabet_.size() + letter];
  }
  bool is_initial(State q) const { return initial_[q]; }
  bool is_final(State q) const { return final_[q]; }

  bool accepts(const Word& w) const {
    std::vector<bool> cur = initial_;
    for (Symbol s : w) {
      std::size_t a = alphabet_.index(s);
      std::vector<bool> nxt(n_, false);
      for (State q = 0; q < n_; ++q)
        if (cur[q])
          for (State t : targets(q, a)) nxt[t] = true;
      cur = std::move(nxt);
    }
    for (State q = 0; q < n_; ++q)
      if (cur[q] && final_[q]) return true;
    return false;
  }

 private:
  std::size_t n_;
  Alphabet alphabet_;
  std::vector<std::vector<State>> trans_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
};

// Accessible power-set automaton, ordered by inclusion of the subsets.
inline OrderedAutomaton subset_construction(const Nfa& nfa,
                                            std::size_t cap = std::size_t{1} << 20) {
  using Subset = std::vector<bool>;
  const std::size_t k = nfa.alphabet().size();
  Subset start(nfa.size(), false);
  for (State q = 0; q < nfa.size(); ++q) start[q] = nfa.is_initial(q);

  std::map<Subset, State> ids{{start, 0}};
  std::vector<Subset> subsets{start};
  std::vector<State> delta;
  for (std::size_t head = 0; head < subsets.size(); ++head) {
    for (std::size_t a = 0; a < k; ++a) {
      Subset next(nfa.size(), false);
      for (State q = 0; q < nfa.size(); ++q)
        if (subsets[head][q])
          for (State t : nfa.targets(q, a)) next[t] = true;
      auto [it, inserted] = ids.emplace(next, subsets.size());
      if (inserted) {
        if (subsets.size() >= cap) throw ResourceError("subset construction exceeds cap");
        subsets.push_back(std::move(next));
      }
      delta.push_back(it->second);
    }
  }

  const std::size_t m = subsets.size();
  StateOrder le(m);
  std::vector<bool> fin(m, false);
  for (State i = 0; i < m; ++i) {
    for (State j = 0; j < m; ++j) {
      bool sub = true;
      for (State q = 0; q < nfa.size() && sub; ++q)
        if (subsets[i][q] && !subsets[j][q]) sub = false;
      le.set(i, j, sub);
    }
    for (State q = 0; q < nfa.size(); ++q)
      if (subsets[i][q] && nfa.is_final(q)) fin[i] = true;
  }
  return OrderedAutomaton(
      OrderedSemiautomaton(Semiautomaton(m, nfa.alphabet(), std::move(delta)), std::move(le)),
      0, std::move(fin));
}

// Arrows reversed, initial and final roles swapped: recognizes the mirror
// image of L(oa).
inline Nfa reverse(const OrderedAutomaton& oa) {
  Nfa nfa(oa.size(), oa.alphabet());
  for (State p = 0; p < oa.size(); ++p) {
    for (std::size_t a = 0; a < oa.letters(); ++a) {
      nfa.add_transition(oa.next(p, a), oa.alphabet().symbol(a), p);
    }
    nfa.set_initial(p, oa.is_final(p));
  }
  nfa.set_final(oa.initial());
  return nfa;
}

inline Nfa reverse(const Nfa& in) {
  Nfa nfa(in.size(), in.alphabet());
  for (State p = 0; p < in.size(); ++p) {
    for (std::size_t a = 0; a < in.alphabet().size(); ++a)
      for (State t : in.targets(p, a)) nfa.add_transition(t, in.alphabet().symbol(a), p);
    nfa.set_initial(p, in.is_final(p));
    nfa.set_final(p, in.is_initial(p));
  }
  return nfa;
}

// Double reversal. The second power-set automaton is already minimal and its
// inclusion order coincides with inclusion of residual languages, because the
// states of a co-deterministic accessible automaton have pairwise disjoint,
// non-empty future languages.
inline OrderedAutomaton brzozowski_minimize(const OrderedAutomaton& oa) {
  return subset_construction(reverse(subset_construction(reverse(oa))));
}

struct InclusionResult {
  bool included = true;
  // Shortest (then lexicographically least) word in L1 ∖ L2 when !included.
  std::optional<Word> counterexample;
};

// Is L(oa1, q1) ⊆ L(oa2, q2)? Breadth-first search of the product automaton.
inline InclusionResult state_inclusion(const OrderedAutomaton& oa1, State q1,
                                       const OrderedAutomaton& oa2, State q2) {
  require_same_alphabet(oa1.alphabet(), oa2.alphabet());
  const std::size_t n2 = oa2.size();
  const std::size_t k = oa1.letters();
  struct Parent {
    std::size_t prev;
    std::size_t letter;
  };
  std::vector<std::optional<Parent>> parent(oa1.size() * n2);
  std::vector<bool> seen(oa1.size() * n2, false);
  std::vector<std::size_t> queue{q1 * n2 + q2};
  seen[queue.front()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t cur = queue[head];
    State p = cur / n2, q = cur % n2;
    if (oa1.is_final(p) && !oa2.is_final(q)) {
      Word w;
      for (std::size_t at = cur; parent[at]; at = parent[at]->prev) {
        w.push_back(oa1.alphabet().symbol(parent[at]->letter));
      }
      std::reverse(w.begin(), w.end());
      return {false, w};
    }
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t nxt = oa1.next(p, a) * n2 + oa2.next(q, a);
      if (!seen[nxt]) {
        seen[nxt] = true;
        parent[nxt] = Parent{cur, a};
        queue.push_back(nxt);
      }
    }
  }
  return {true, std::nullopt};
}

inline InclusionResult language_inclusion(const OrderedAutomaton& oa1,
                                          const OrderedAutomaton& oa2) {
  return state_inclusion(oa1, oa1.initial(), oa2, oa2.initial());
}

inline bool language_equivalent(const OrderedAutomaton& a, const OrderedAutomaton& b) {
  return language_inclusion(a, b).included && language_inclusion(b, a).included;
}

// Accepted words of length ≤ max_len in length-lexicographic order.
inline std::vector<Word> enumerate_words(const OrderedAutomaton& oa, std::size_t max_len) {
  const std::size_t n = oa.size();
  // live[r][q]: some word of length exactly r leads from q into F.
  std::vector<std::vector<bool>> live(max_len + 1, std::vector<bool>(n, false));
  for (State q = 0; q < n; ++q) live[0][q] = oa.is_final(q);
  for (std::size_t r = 1; r <= max_len; ++r)
    for (State q = 0; q < n; ++q)
      for (std::size_t a = 0; a < oa.letters() && !live[r][q]; ++a)
        live[r][q] = live[r - 1][oa.next(q, a)];

  std::vector<Word> out;
  Word cur;
  auto walk = [&](auto&& self, State q, std::size_t remaining) -> void {
    if (!live[remaining][q]) return;
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t a = 0; a < oa.letters(); ++a) {
      cur.push_back(oa.alphabet().symbol(a));
      self(self, oa.next(q, a), remaining - 1);
      cur.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len; ++len) walk(walk, oa.initial(), len);
  return out;
}

// Every word over the alphabet of length ≤ max_len, length-lex order.
inline std::vector<Word> all_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Symbol s : alphabet.symbols()) out.push_back(out[i] + s);
    begin = end;
  }
  return out;
}

}  // namespace orda
