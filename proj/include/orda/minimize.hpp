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

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "orda/core.hpp"

namespace orda {

// Quasiorder on states: reflexive, transitive and compatible with every
// letter action.
using StatePreorder = Relation;

// The greatest relation contained in (Q×F) ∪ ((Q∖F)×Q) that is closed under
// letter actions, i.e. (p, q) is kept iff p·u ∈ F implies q·u ∈ F for every
// word u. The declared order of the input is ignored.
//
// Pairs are removed through a worklist: once (p', q') is gone, every pair
// (p, q) with p·a = p' and q·a = q' must go as well.
inline StatePreorder preorder(const OrderedAutomaton& oa) {
  const std::size_t n = oa.size();
  const std::size_t k = oa.letters();

  // pred[(a * n) + t] lists the states s with s·a = t.
  std::vector<std::vector<State>> pred(k * n);
  for (State s = 0; s < n; ++s)
    for (std::size_t a = 0; a < k; ++a) pred[a * n + oa.next(s, a)].push_back(s);

  StatePreorder rel = Relation::full(n);
  std::deque<std::pair<State, State>> removed;
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      if (oa.is_final(p) && !oa.is_final(q)) {
        rel.set(p, q, false);
        removed.emplace_back(p, q);
      }

  while (!removed.empty()) {
    auto [p2, q2] = removed.front();
    removed.pop_front();
    for (std::size_t a = 0; a < k; ++a) {
      for (State p : pred[a * n + p2]) {
        for (State q : pred[a * n + q2]) {
          if (rel(p, q)) {
            rel.set(p, q, false);
            removed.emplace_back(p, q);
          }
        }
      }
    }
  }
  return rel;
}

// Sub-automaton on the states reachable from the initial state, renumbered in
// breadth-first order (letters in alphabet order). `kept` maps new indices to
// old ones.
struct Restriction {
  OrderedAutomaton automaton;
  std::vector<State> kept;
};

inline Restriction restrict_reachable(const OrderedAutomaton& oa) {
  auto kept = reachable_from(oa.semiautomaton(), oa.initial());
  std::vector<State> renum(oa.size(), 0);
  for (State i = 0; i < kept.size(); ++i) renum[kept[i]] = i;
  const std::size_t m = kept.size();
  std::vector<State> delta(m * oa.letters());
  StateOrder le(m);
  std::vector<bool> fin(m);
  for (State i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < oa.letters(); ++a) {
      delta[i * oa.letters() + a] = renum[oa.next(kept[i], a)];
    }
    for (State j = 0; j < m; ++j) le.set(i, j, oa.leq(kept[i], kept[j]));
    fin[i] = oa.is_final(kept[i]);
  }
  return {OrderedAutomaton(
              OrderedSemiautomaton(Semiautomaton(m, oa.alphabet(), std::move(delta)),
                                   std::move(le)),
              0, std::move(fin)),
          std::move(kept)};
}

// Result of minimization together with the quotient map from the reachable
// states of the input (indexed as in the input) to the output states.
struct Minimized {
  OrderedAutomaton automaton;
  // class_of[q] for reachable q; std::nullopt for unreachable input states.
  std::vector<std::optional<State>> class_of;
};

inline Minimized minimize_with_map(const OrderedAutomaton& oa) {
  auto [reach, kept] = restrict_reachable(oa);
  const std::size_t n = reach.size();
  const std::size_t k = reach.letters();
  StatePreorder rel = preorder(reach);

  // Representative of each ρ-class: its smallest member in input numbering.
  std::vector<State> rep(n);
  for (State p = 0; p < n; ++p) {
    rep[p] = p;
    for (State q = 0; q < n; ++q) {
      if (rel(p, q) && rel(q, p) && kept[q] < kept[rep[p]]) rep[p] = q;
    }
  }

  // Number classes by BFS from the initial class.
  std::vector<std::optional<State>> id(n);
  std::vector<State> order{rep[0]};
  id[rep[0]] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t a = 0; a < k; ++a) {
      State r = rep[reach.next(order[head], a)];
      if (!id[r]) {
        id[r] = order.size();
        order.push_back(r);
      }
    }
  }

  const std::size_t m = order.size();
  std::vector<State> delta(m * k);
  StateOrder le(m);
  std::vector<bool> fin(m);
  for (State i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < k; ++a) delta[i * k + a] = *id[rep[reach.next(order[i], a)]];
    for (State j = 0; j < m; ++j) le.set(i, j, rel(order[i], order[j]));
    fin[i] = reach.is_final(order[i]);
  }

  Minimized out{OrderedAutomaton(OrderedSemiautomaton(
                                     Semiautomaton(m, reach.alphabet(), std::move(delta)),
                                     std::move(le)),
                                 0, std::move(fin)),
                std::vector<std::optional<State>>(oa.size())};
  for (State p = 0; p < n; ++p) out.class_of[kept[p]] = *id[rep[p]];
  return out;
}

// Minimal ordered automaton of L(oa): reachable part, quotiented by the
// symmetric part of preorder(), ordered by preorder() itself.
inline OrderedAutomaton minimize_ordered(const OrderedAutomaton& oa) {
  return minimize_with_map(oa).automaton;
}

// Isomorphism of ordered automata whose states are all reachable from the
// initial state. Deterministic automata leave at most one candidate: the map
// that follows equal words from both initial states. Inputs with unreachable
// states are never reported isomorphic.
inline std::optional<std::vector<State>> isomorphism(const OrderedAutomaton& a,
                                                     const OrderedAutomaton& b) {
  if (a.size() != b.size() || !(a.alphabet() == b.alphabet())) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<std::optional<State>> map(n);
  std::vector<bool> used(n, false);
  std::vector<State> queue{a.initial()};
  map[a.initial()] = b.initial();
  used[b.initial()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    State p = queue[head];
    State q = *map[p];
    for (std::size_t l = 0; l < a.letters(); ++l) {
      State p2 = a.next(p, l);
      State q2 = b.next(q, l);
      if (map[p2]) {
        if (*map[p2] != q2) return std::nullopt;
      } else {
        if (used[q2]) return std::nullopt;
        map[p2] = q2;
        used[q2] = true;
        queue.push_back(p2);
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  std::vector<State> bij(n);
  for (State p = 0; p < n; ++p) {
    bij[p] = *map[p];
    if (a.is_final(p) != b.is_final(bij[p])) return std::nullopt;
  }
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      if (a.leq(p, q) != b.leq(bij[p], bij[q])) return std::nullopt;
  return bij;
}

inline bool isomorphic(const OrderedAutomaton& a, const OrderedAutomaton& b) {
  return isomorphism(a, b).has_value();
}

}  // namespace orda
