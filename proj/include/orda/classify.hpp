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

// Structural classifiers for semiautomata. Each returns a Verdict whose
// counterexample can be replayed against the defining condition:
//
//   counter-free      q·uⁿ = q implies q·u = q
//   acyclic           q·u = q implies q·a = q for every a in c(u)
//   confluent         q·u, q·v join under a word w with c(w) ⊆ c(uv)
//   weakly confluent  q·u, q·v join under some word
//   synchronizing     every pair of states joins
//   strongly acyclic  every state on a cycle is absorbing
//   extensive         q ≤ q·a;  n-extensive: q ≤ q·u for |u| = n

#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orda/constructions.hpp"
#include "orda/core.hpp"
#include "orda/minimize.hpp"
#include "orda/monoid.hpp"
#include "orda/verdict.hpp"

namespace orda {

inline constexpr std::size_t kDefaultConfluenceLetterCap = 10;

namespace detail {

// Strongly connected components of the letter graph; comp[q] numbers the
// components in reverse topological order (Tarjan).
inline std::vector<std::size_t> scc(const Semiautomaton& sa, std::size_t& count) {
  const std::size_t n = sa.size();
  std::vector<std::size_t> comp(n, SIZE_MAX), low(n), num(n, SIZE_MAX);
  std::vector<State> stack;
  std::vector<bool> on(n, false);
  std::size_t counter = 0;
  count = 0;
  auto visit = [&](auto&& self, State v) -> void {
    num[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (std::size_t a = 0; a < sa.letters(); ++a) {
      State w = sa.next(v, a);
      if (num[w] == SIZE_MAX) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], num[w]);
      }
    }
    if (low[v] == num[v]) {
      State w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (State q = 0; q < n; ++q)
    if (num[q] == SIZE_MAX) visit(visit, q);
  return comp;
}

// Shortest word leading from `from` to `to` using only states for which
// `allowed` holds; empty optional if none.
inline std::optional<Word> path_within(const Semiautomaton& sa, State from, State to,
                                       const std::vector<bool>& allowed) {
  std::vector<std::optional<std::pair<State, std::size_t>>> parent(sa.size());
  std::vector<bool> seen(sa.size(), false);
  std::vector<State> queue{from};
  seen[from] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    State p = queue[head];
    if (p == to) {
      Word w;
      for (State at = to; parent[at]; at = parent[at]->first)
        w.push_back(sa.alphabet().symbol(parent[at]->second));
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t a = 0; a < sa.letters(); ++a) {
      State t = sa.next(p, a);
      if (!seen[t] && allowed[t]) {
        seen[t] = true;
        parent[t] = std::make_pair(p, a);
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

// Witness (q, u, a) of a non-singleton component: q·u = q, a ∈ c(u),
// q·a ≠ q.
inline Verdict cycle_witness(const Semiautomaton& sa, const std::vector<std::size_t>& comp,
                             State q, const std::string& what) {
  std::vector<bool> allowed(sa.size());
  for (State s = 0; s < sa.size(); ++s) allowed[s] = comp[s] == comp[q];
  for (std::size_t a = 0; a < sa.letters(); ++a) {
    State r = sa.next(q, a);
    if (r == q || comp[r] != comp[q]) continue;
    auto back = path_within(sa, r, q, allowed);
    Verdict v = Verdict::no(what);
    v.states = {q};
    v.words = {Word(1, sa.alphabet().symbol(a)) + *back};
    v.letters = {sa.alphabet().symbol(a)};
    return v;
  }
  return Verdict::no(what);
}

inline std::uint32_t content_mask(const Alphabet& alphabet, const Word& w) {
  std::uint32_t m = 0;
  for (Symbol s : w) m |= 1u << alphabet.index(s);
  return m;
}

// joinable[p * n + q]: some word over the letters in `mask` sends p and q to
// the same state.
inline std::vector<bool> joinable_pairs(const Semiautomaton& sa, std::uint32_t mask) {
  const std::size_t n = sa.size();
  std::vector<std::vector<std::size_t>> pred(n * n);
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      for (std::size_t a = 0; a < sa.letters(); ++a)
        if (mask & (1u << a)) pred[sa.next(p, a) * n + sa.next(q, a)].push_back(p * n + q);
  std::vector<bool> ok(n * n, false);
  std::vector<std::size_t> queue;
  for (State p = 0; p < n; ++p) {
    ok[p * n + p] = true;
    queue.push_back(p * n + p);
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t s : pred[queue[head]])
      if (!ok[s]) {
        ok[s] = true;
        queue.push_back(s);
      }
  return ok;
}

// Shortest word merging p and q (forward search in the pair automaton).
inline std::optional<Word> merging_word(const Semiautomaton& sa, State p, State q) {
  const std::size_t n = sa.size();
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(n * n);
  std::vector<bool> seen(n * n, false);
  std::vector<std::size_t> queue{p * n + q};
  seen[queue[0]] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t cur = queue[head];
    if (cur / n == cur % n) {
      Word w;
      for (std::size_t at = cur; parent[at]; at = parent[at]->first)
        w.push_back(sa.alphabet().symbol(parent[at]->second));
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t a = 0; a < sa.letters(); ++a) {
      std::size_t nxt = sa.next(cur / n, a) * n + sa.next(cur % n, a);
      if (!seen[nxt]) {
        seen[nxt] = true;
        parent[nxt] = std::make_pair(cur, a);
        queue.push_back(nxt);
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline Verdict is_counter_free(const Semiautomaton& sa, std::size_t monoid_cap = kDefaultMonoidCap) {
  auto tm = TransitionMonoid::build(discrete(sa), monoid_cap);
  auto ap = is_aperiodic(tm);
  if (ap) return Verdict::yes("transition monoid is aperiodic");
  const Element m = ap.witness.front();
  const Element w = tm.omega_power(m);
  for (State p = 0; p < sa.size(); ++p) {
    State q = tm.apply(p, w);
    if (tm.apply(q, m) != q) {
      Verdict v = Verdict::no("q·u^n = q but q·u != q");
      v.states = {q};
      v.words = {tm.witness(m)};
      return v;
    }
  }
  return Verdict::no("non-aperiodic element " + tm.witness(m));
}

inline Verdict is_acyclic(const Semiautomaton& sa) {
  std::size_t count = 0;
  auto comp = detail::scc(sa, count);
  std::vector<std::size_t> size(count, 0);
  for (State q = 0; q < sa.size(); ++q) ++size[comp[q]];
  for (State q = 0; q < sa.size(); ++q) {
    if (size[comp[q]] > 1) {
      return detail::cycle_witness(sa, comp, q, "cycle through q leaves q on a letter of c(u)");
    }
  }
  // Tarjan numbers components in reverse topological order.
  Verdict v = Verdict::yes("topological order");
  v.states.resize(sa.size());
  std::iota(v.states.begin(), v.states.end(), State{0});
  std::sort(v.states.begin(), v.states.end(),
            [&](State a, State b) { return comp[a] > comp[b]; });
  return v;
}

inline Verdict is_confluent(const Semiautomaton& sa,
                            std::size_t letter_cap = kDefaultConfluenceLetterCap) {
  const std::size_t k = sa.letters();
  if (k > letter_cap || k > 31) {
    throw ResourceError("confluence check limited to " + std::to_string(letter_cap) +
                        " letters");
  }
  const std::size_t n = sa.size();
  const std::size_t masks = std::size_t{1} << k;
  std::map<std::uint32_t, std::vector<bool>> joinable;
  auto join = [&](std::uint32_t mask) -> const std::vector<bool>& {
    auto it = joinable.find(mask);
    if (it == joinable.end()) it = joinable.emplace(mask, detail::joinable_pairs(sa, mask)).first;
    return it->second;
  };

  for (State q = 0; q < n; ++q) {
    // BFS over (state, content) pairs reachable from (q, ∅).
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(n * masks);
    std::vector<bool> seen(n * masks, false);
    std::vector<std::size_t> queue{q * masks};
    seen[q * masks] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t cur = queue[head];
      State p = cur / masks;
      std::uint32_t c = static_cast<std::uint32_t>(cur % masks);
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t nxt = sa.next(p, a) * masks + (c | (1u << a));
        if (!seen[nxt]) {
          seen[nxt] = true;
          parent[nxt] = std::make_pair(cur, a);
          queue.push_back(nxt);
        }
      }
    }
    auto word_to = [&](std::size_t node) {
      Word w;
      for (std::size_t at = node; parent[at]; at = parent[at]->first)
        w.push_back(sa.alphabet().symbol(parent[at]->second));
      std::reverse(w.begin(), w.end());
      return w;
    };
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t j = i + 1; j < queue.size(); ++j) {
        State p1 = queue[i] / masks, p2 = queue[j] / masks;
        if (p1 == p2) continue;
        std::uint32_t c = static_cast<std::uint32_t>((queue[i] | queue[j]) % masks);
        c = static_cast<std::uint32_t>(queue[i] % masks) | static_cast<std::uint32_t>(queue[j] % masks);
        if (!join(c)[p1 * n + p2]) {
          Verdict v = Verdict::no("q·u and q·v cannot be joined within c(uv)");
          v.states = {q};
          v.words = {word_to(queue[i]), word_to(queue[j])};
          return v;
        }
      }
  }
  return Verdict::yes();
}

inline Verdict is_pt_semiautomaton(const Semiautomaton& sa,
                                   std::size_t letter_cap = kDefaultConfluenceLetterCap) {
  if (auto v = is_acyclic(sa); !v) return v;
  return is_confluent(sa, letter_cap);
}

// For acyclic semiautomata: q·u·(uv)^|Q| = q·v·(uv)^|Q| for all words u, v of
// length ≤ max_len. Equivalent to confluence on acyclic inputs.
inline Verdict confluence_by_powers(const Semiautomaton& sa, std::size_t max_len) {
  if (!is_acyclic(sa)) throw PreconditionError("confluence_by_powers needs an acyclic semiautomaton");
  std::vector<Word> words{Word{}};
  for (std::size_t len = 1, begin = 0; len <= max_len; ++len) {
    std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Symbol s : sa.alphabet().symbols()) words.push_back(words[i] + s);
    begin = end;
  }
  const std::size_t n = sa.size();
  auto power = [&](State q, const Word& w) {
    for (std::size_t i = 0; i < n; ++i) q = sa.step(q, w);
    return q;
  };
  for (const auto& u : words)
    for (const auto& v : words) {
      Word uv = u + v;
      for (State q = 0; q < n; ++q) {
        if (power(sa.step(q, u), uv) != power(sa.step(q, v), uv)) {
          Verdict out = Verdict::no("q·u·(uv)^|Q| != q·v·(uv)^|Q|");
          out.states = {q};
          out.words = {u, v};
          return out;
        }
      }
    }
  return Verdict::yes();
}

inline Verdict has_extensive_actions(const OrderedSemiautomaton& osa) {
  for (State q = 0; q < osa.size(); ++q)
    for (std::size_t a = 0; a < osa.letters(); ++a)
      if (!osa.leq(q, osa.next(q, a))) {
        Verdict v = Verdict::no("q is not below q·a");
        v.states = {q};
        v.letters = {osa.alphabet().symbol(a)};
        return v;
      }
  return Verdict::yes();
}

inline Verdict is_autonomous(const Semiautomaton& sa) {
  for (State q = 0; q < sa.size(); ++q)
    for (std::size_t a = 1; a < sa.letters(); ++a)
      if (sa.next(q, a) != sa.next(q, 0)) {
        Verdict v = Verdict::no("letters act differently");
        v.states = {q};
        v.letters = {sa.alphabet().symbol(0), sa.alphabet().symbol(a)};
        return v;
      }
  return Verdict::yes();
}

// Autonomous, and a disjoint union of cycles whose lengths divide d. A
// component with a tail leading into its cycle is rejected and reported.
inline Verdict is_cycle_union_dividing(const Semiautomaton& sa, std::size_t d) {
  if (d == 0) throw PreconditionError("d must be positive");
  if (auto v = is_autonomous(sa); !v) return v;
  const std::size_t n = sa.size();
  std::vector<std::size_t> indegree(n, 0);
  for (State q = 0; q < n; ++q) ++indegree[sa.next(q, 0)];
  for (State q = 0; q < n; ++q)
    if (indegree[q] == 0) {
      Verdict v = Verdict::no("component is not a cycle: state has a tail (rho shape)");
      v.states = {q};
      return v;
    }
  Verdict out = Verdict::yes();
  std::vector<bool> done(n, false);
  for (State q = 0; q < n; ++q) {
    if (done[q]) continue;
    std::vector<State> cycle;
    for (State p = q; !done[p]; p = sa.next(p, 0)) {
      done[p] = true;
      cycle.push_back(p);
    }
    if (d % cycle.size() != 0) {
      Verdict v = Verdict::no("cycle length " + std::to_string(cycle.size()) +
                              " does not divide " + std::to_string(d));
      v.states = {q};
      v.parts = {cycle};
      return v;
    }
    out.parts.push_back(std::move(cycle));
  }
  return out;
}

inline Verdict is_synchronizing(const Semiautomaton& sa) {
  const std::size_t n = sa.size();
  auto ok = detail::joinable_pairs(sa, sa.letters() >= 32 ? ~0u : (1u << sa.letters()) - 1);
  for (State p = 0; p < n; ++p)
    for (State q = p + 1; q < n; ++q)
      if (!ok[p * n + q]) {
        Verdict v = Verdict::no("pair cannot be merged");
        v.states = {p, q};
        return v;
      }
  // Greedy reset word: repeatedly merge the two smallest surviving states.
  std::vector<State> current(n);
  std::iota(current.begin(), current.end(), State{0});
  Word reset;
  while (current.size() > 1) {
    Word w = *detail::merging_word(sa, current[0], current[1]);
    reset += w;
    for (auto& s : current) s = sa.step(s, w);
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
  }
  Verdict v = Verdict::yes("reset word");
  v.words = {reset};
  v.states = {current.front()};
  return v;
}

// Weakly connected components, each listed in increasing state order.
inline std::vector<std::vector<State>> weak_components(const Semiautomaton& sa) {
  const std::size_t n = sa.size();
  std::vector<State> parent(n);
  std::iota(parent.begin(), parent.end(), State{0});
  auto find = [&](State x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (State q = 0; q < n; ++q)
    for (std::size_t a = 0; a < sa.letters(); ++a) parent[find(q)] = find(sa.next(q, a));
  std::map<State, std::vector<State>> groups;
  for (State q = 0; q < n; ++q) groups[find(q)].push_back(q);
  std::vector<std::vector<State>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

// Disjoint union of synchronizing semiautomata.
inline Verdict is_weakly_confluent(const Semiautomaton& sa) {
  auto comps = weak_components(sa);
  for (const auto& c : comps) {
    auto sub = subsemiautomaton(discrete(sa), c);
    auto v = is_synchronizing(sub.osa.semiautomaton());
    if (!v) {
      Verdict out = Verdict::no("component is not synchronizing");
      out.states = {c[v.states[0]], c[v.states[1]]};
      out.parts = comps;
      return out;
    }
  }
  Verdict out = Verdict::yes("components");
  out.parts = std::move(comps);
  return out;
}

inline Verdict is_strongly_acyclic(const Semiautomaton& sa) {
  std::size_t count = 0;
  auto comp = detail::scc(sa, count);
  std::vector<std::size_t> size(count, 0);
  for (State q = 0; q < sa.size(); ++q) ++size[comp[q]];
  for (State q = 0; q < sa.size(); ++q)
    if (size[comp[q]] > 1) {
      return detail::cycle_witness(sa, comp, q, "state on a cycle is not absorbing");
    }
  for (State q = 0; q < sa.size(); ++q) {
    std::optional<std::size_t> loop, leave;
    for (std::size_t a = 0; a < sa.letters(); ++a) {
      if (sa.next(q, a) == q) {
        if (!loop) loop = a;
      } else if (!leave) {
        leave = a;
      }
    }
    if (loop && leave) {
      Verdict v = Verdict::no("state with a self-loop is not absorbing");
      v.states = {q};
      v.words = {Word(1, sa.alphabet().symbol(*loop))};
      v.letters = {sa.alphabet().symbol(*leave)};
      return v;
    }
  }
  return Verdict::yes();
}

// The unique absorbing state reachable from q in a strongly acyclic confluent
// semiautomaton.
inline std::optional<State> main_follower(const Semiautomaton& sa, State q) {
  if (!is_strongly_acyclic(sa) || !is_confluent(sa)) {
    throw PreconditionError("main follower needs a strongly acyclic confluent semiautomaton");
  }
  std::optional<State> found;
  for (State p : reachable_from(sa, q)) {
    bool absorbing = true;
    for (std::size_t a = 0; a < sa.letters() && absorbing; ++a) absorbing = sa.next(p, a) == p;
    if (absorbing) {
      if (found) return std::nullopt;
      found = p;
    }
  }
  return found;
}

// q ≤ q·u for all q and all |u| = n. Tracks, per start state, the set of
// states reachable in exactly k steps together with the length-lex least word.
inline Verdict has_n_extensive_actions(const OrderedSemiautomaton& osa, std::size_t n) {
  const std::size_t size = osa.size();
  for (State q = 0; q < size; ++q) {
    std::vector<std::pair<State, Word>> layer{{q, Word{}}};
    for (std::size_t step = 0; step < n; ++step) {
      std::vector<std::pair<State, Word>> next;
      std::vector<bool> seen(size, false);
      for (const auto& [p, w] : layer)
        for (std::size_t a = 0; a < osa.letters(); ++a) {
          State t = osa.next(p, a);
          if (!seen[t]) {
            seen[t] = true;
            next.emplace_back(t, w + osa.alphabet().symbol(a));
          }
        }
      layer = std::move(next);
    }
    for (const auto& [p, w] : layer)
      if (!osa.leq(q, p)) {
        Verdict v = Verdict::no("q is not below q·u with |u| = " + std::to_string(n));
        v.states = {q};
        v.words = {w};
        return v;
      }
  }
  return Verdict::yes();
}

struct ClassificationReport {
  // The minimal ordered automaton the verdicts speak about.
  OrderedAutomaton canonical;
  std::vector<std::pair<std::string, Verdict>> entries;

  const Verdict& at(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return v;
    throw std::out_of_range("no class '" + key + "' in report");
  }
  bool holds(const std::string& key) const { return at(key).holds; }
};

struct ClassifyOptions {
  std::vector<std::size_t> insertion_ns;
  std::size_t monoid_cap = kDefaultMonoidCap;
  std::size_t letter_cap = kDefaultConfluenceLetterCap;
};

// Minimizes first, so every verdict is about the language of oa.
inline ClassificationReport classify_language(const OrderedAutomaton& oa,
                                              const ClassifyOptions& opts = {}) {
  ClassificationReport r{minimize_ordered(oa), {}};
  const auto& can = r.canonical;
  const auto& sa = can.semiautomaton();

  Verdict strongly_acyclic = is_strongly_acyclic(sa);
  Verdict acyclic = is_acyclic(sa);
  Verdict confluent = is_confluent(sa, opts.letter_cap);
  Verdict pt = !acyclic ? acyclic : confluent;

  Verdict finite = Verdict::yes(), cofinite = Verdict::yes();
  if (!strongly_acyclic || !confluent) {
    finite = cofinite = !strongly_acyclic ? strongly_acyclic : confluent;
  } else {
    State f = *main_follower(sa, can.initial());
    bool order_condition = true;
    for (State q = 0; q < can.size(); ++q) order_condition = order_condition && can.leq(f, q);
    const std::string follower = "main follower " + std::to_string(f);
    if (can.is_final(f)) {
      finite = Verdict::no(follower + " is final");
      cofinite = Verdict::yes(follower + " is final");
    } else {
      finite = Verdict::yes(follower + " is not final; follower below every state: " +
                            (order_condition ? "yes" : "no"));
      cofinite = Verdict::no(follower + " is not final");
    }
    finite.states = cofinite.states = {f};
  }

  r.entries.emplace_back("finite", finite);
  r.entries.emplace_back("cofinite", cofinite);
  r.entries.emplace_back("prefix_testable", strongly_acyclic);
  r.entries.emplace_back("piecewise_testable", pt);
  r.entries.emplace_back("positive_piecewise_testable", has_extensive_actions(can.osa()));
  r.entries.emplace_back("star_free", is_counter_free(sa, opts.monoid_cap));
  r.entries.emplace_back("r_trivial_language", acyclic);
  r.entries.emplace_back("weakly_confluent", is_weakly_confluent(sa));
  r.entries.emplace_back("synchronizing", is_synchronizing(sa));
  r.entries.emplace_back("autonomous", is_autonomous(sa));
  for (std::size_t n : opts.insertion_ns) {
    r.entries.emplace_back("n_insertion_closed_" + std::to_string(n),
                           has_n_extensive_actions(can.osa(), n));
  }
  return r;
}

// "(0,"ab","a")"-style rendering of a verdict's witness tuple.
inline std::string format_witness(const Verdict& v) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&]() {
    if (!first) out << ',';
    first = false;
  };
  for (State q : v.states) {
    sep();
    out << q;
  }
  for (const auto& w : v.words) {
    sep();
    out << '"' << w << '"';
  }
  for (Symbol s : v.letters) {
    sep();
    out << '"' << s << '"';
  }
  if (first) return {};
  return "(" + out.str() + ")";
}

inline std::string render_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "judged: minimal ordered automaton of the input language (" << r.canonical.size()
      << " states)\n";
  for (const auto& [key, v] : r.entries) {
    out << key << ' ' << (v.holds ? "✓" : "✗");
    std::string w = format_witness(v);
    if (!v.holds && !w.empty()) out << " witness " << w;
    if (v.holds && !v.words.empty()) out << " certificate " << w;
    if (!v.detail.empty()) out << "  # " << v.detail;
    out << '\n';
  }
  return out.str();
}

inline std::string render_kv(const ClassificationReport& r) {
  std::ostringstream out;
  for (const auto& [key, v] : r.entries) out << key << '=' << (v.holds ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace orda
