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

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orda/core.hpp"

namespace orda {

using Transformation = std::vector<State>;
using Element = std::size_t;

inline constexpr std::size_t kDefaultMonoidCap = 1000000;

namespace detail {

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (State s : t) {
      h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace detail

// Transition monoid of an ordered semiautomaton. Elements are numbered in
// breadth-first order over words (length-lex), so element 0 is the identity
// and witness(e) is the length-lex least word acting as e. Composition reads
// left to right: q·(m n) = (q·m)·n.
class TransitionMonoid {
 public:
  static TransitionMonoid build(const OrderedSemiautomaton& osa,
                                std::size_t cap = kDefaultMonoidCap) {
    TransitionMonoid tm;
    tm.alphabet_ = osa.alphabet();
    tm.order_ = osa.order();
    const std::size_t n = osa.size();
    const std::size_t k = osa.letters();

    std::unordered_map<Transformation, Element, detail::TransformationHash> index;
    Transformation id(n);
    for (State q = 0; q < n; ++q) id[q] = q;
    index.emplace(id, 0);
    tm.elements_.push_back(std::move(id));
    tm.witness_.emplace_back();
    tm.parent_.push_back(0);
    tm.last_letter_.push_back(0);

    for (Element head = 0; head < tm.elements_.size(); ++head) {
      for (std::size_t a = 0; a < k; ++a) {
        Transformation t(n);
        for (State q = 0; q < n; ++q) t[q] = osa.next(tm.elements_[head][q], a);
        auto [it, inserted] = index.emplace(t, tm.elements_.size());
        if (inserted) {
          if (tm.elements_.size() >= cap) {
            throw ResourceError("transition monoid exceeds " + std::to_string(cap) +
                                " elements");
          }
          tm.elements_.push_back(std::move(t));
          tm.witness_.push_back(tm.witness_[head] + osa.alphabet().symbol(a));
          tm.parent_.push_back(head);
          tm.last_letter_.push_back(a);
        }
        tm.right_.push_back(it->second);
      }
    }
    tm.generators_.resize(k);
    for (std::size_t a = 0; a < k; ++a) tm.generators_[a] = tm.right_[a];

    const std::size_t m = tm.elements_.size();
    if (m <= kMemoLimit) {
      // table[i][j] = i·j, filled along the breadth-first tree of j.
      tm.table_.resize(m * m);
      for (Element i = 0; i < m; ++i) {
        tm.table_[i * m] = static_cast<std::uint32_t>(i);
        for (Element j = 1; j < m; ++j) {
          tm.table_[i * m + j] = static_cast<std::uint32_t>(
              tm.right_[tm.table_[i * m + tm.parent_[j]] * k + tm.last_letter_[j]]);
        }
      }
    }
    return tm;
  }

  std::size_t size() const { return elements_.size(); }
  std::size_t states() const { return order_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }
  const StateOrder& state_order() const { return order_; }
  Element identity() const { return 0; }
  const Transformation& transformation(Element e) const { return elements_[e]; }
  const Word& witness(Element e) const { return witness_[e]; }
  Element generator(std::size_t letter) const { return generators_[letter]; }
  Element generator(Symbol s) const { return generators_[alphabet_.index(s)]; }
  State apply(State q, Element e) const { return elements_[e][q]; }

  // e·a for a letter index.
  Element right(Element e, std::size_t letter) const {
    return right_[e * alphabet_.size() + letter];
  }

  Element compose(Element a, Element b) const {
    const std::size_t m = elements_.size();
    if (!table_.empty()) return table_[a * m + b];
    Element cur = a;
    for (Symbol s : witness_[b]) cur = right(cur, alphabet_.index(s));
    return cur;
  }

  Element action_of(const Word& w) const {
    Element cur = identity();
    for (Symbol s : w) cur = right(cur, alphabet_.index(s));
    return cur;
  }

  // The idempotent power of e.
  Element omega_power(Element e) const {
    std::vector<Element> powers{e};  // powers[i] = e^(i+1)
    std::unordered_map<Element, std::size_t> first;
    first.emplace(e, 0);
    while (true) {
      Element nxt = compose(powers.back(), e);
      auto [it, inserted] = first.emplace(nxt, powers.size());
      if (!inserted) {
        const std::size_t index = it->second + 1;  // smallest exponent in the cycle
        const std::size_t period = powers.size() + 1 - index;
        std::size_t exp = ((index + period - 1) / period) * period;
        return powers[exp - 1];
      }
      powers.push_back(nxt);
    }
  }

  // Smallest n ≥ 1 with e^n = e^ω.
  std::size_t omega_exponent(Element e) const {
    Element target = omega_power(e);
    Element cur = e;
    std::size_t n = 1;
    while (cur != target) {
      cur = compose(cur, e);
      ++n;
    }
    return n;
  }

  bool leq(Element a, Element b) const {
    for (State q = 0; q < states(); ++q)
      if (!order_(elements_[a][q], elements_[b][q])) return false;
    return true;
  }

  // Elements realized by non-empty words (the transition semigroup).
  std::vector<bool> semigroup_elements() const {
    std::vector<bool> in(size(), false);
    std::vector<Element> queue;
    for (Element g : generators_)
      if (!in[g]) {
        in[g] = true;
        queue.push_back(g);
      }
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t a = 0; a < alphabet_.size(); ++a) {
        Element t = right(queue[head], a);
        if (!in[t]) {
          in[t] = true;
          queue.push_back(t);
        }
      }
    return in;
  }

 private:
  static constexpr std::size_t kMemoLimit = 2000;

  Alphabet alphabet_;
  StateOrder order_;
  std::vector<Transformation> elements_;
  std::vector<Word> witness_;
  std::vector<Element> parent_;
  std::vector<std::size_t> last_letter_;
  std::vector<Element> right_;
  std::vector<Element> generators_;
  std::vector<std::uint32_t> table_;
};

// A yes/no answer about a monoid with the offending elements on failure.
struct MonoidCheck {
  bool holds = true;
  std::vector<Element> witness;
  explicit operator bool() const { return holds; }
};

// x^ω x = x^ω for every element.
inline MonoidCheck is_aperiodic(const TransitionMonoid& tm) {
  for (Element m = 0; m < tm.size(); ++m) {
    Element w = tm.omega_power(m);
    if (tm.compose(w, m) != w) return {false, {m}};
  }
  return {};
}

namespace detail {

// reach[m] = set of elements reachable from m through `succ`.
inline std::vector<std::vector<bool>> closure(
    std::size_t size, const std::function<void(Element, std::vector<Element>&)>& succ) {
  std::vector<std::vector<bool>> reach(size, std::vector<bool>(size, false));
  std::vector<Element> next;
  for (Element m = 0; m < size; ++m) {
    std::vector<Element> queue{m};
    reach[m][m] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      next.clear();
      succ(queue[head], next);
      for (Element t : next)
        if (!reach[m][t]) {
          reach[m][t] = true;
          queue.push_back(t);
        }
    }
  }
  return reach;
}

inline MonoidCheck distinct_mutual(const std::vector<std::vector<bool>>& reach) {
  for (Element m = 0; m < reach.size(); ++m)
    for (Element n = m + 1; n < reach.size(); ++n)
      if (reach[m][n] && reach[n][m]) return {false, {m, n}};
  return {};
}

}  // namespace detail

// mM = nM implies m = n. mM is the closure of m under right multiplication
// by generators.
inline MonoidCheck is_r_trivial(const TransitionMonoid& tm) {
  auto reach = detail::closure(tm.size(), [&](Element e, std::vector<Element>& out) {
    for (std::size_t a = 0; a < tm.alphabet().size(); ++a) out.push_back(tm.right(e, a));
  });
  return detail::distinct_mutual(reach);
}

// MmM = MnM implies m = n.
inline MonoidCheck is_j_trivial(const TransitionMonoid& tm) {
  auto reach = detail::closure(tm.size(), [&](Element e, std::vector<Element>& out) {
    for (std::size_t a = 0; a < tm.alphabet().size(); ++a) {
      out.push_back(tm.right(e, a));
      out.push_back(tm.compose(tm.generator(a), e));
    }
  });
  return detail::distinct_mutual(reach);
}

inline bool leq(const TransitionMonoid& tm, Element a, Element b) { return tm.leq(a, b); }

// 1 ≤ x for every element x.
inline MonoidCheck satisfies_one_leq_x(const TransitionMonoid& tm) {
  for (Element m = 0; m < tm.size(); ++m)
    if (!tm.leq(tm.identity(), m)) return {false, {m}};
  return {};
}

}  // namespace orda
