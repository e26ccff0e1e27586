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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orda {

using State = std::size_t;
using Symbol = char;
// Words are strings of single-character symbols; the empty string is λ.
using Word = std::string;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symbol outside the declared alphabet, or two alphabets that disagree.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; carries a line or column position when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A configured cap (states, monoid elements, substitutions, ...) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid automaton or relation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string word_repr(const Word& w) { return w.empty() ? "_" : w; }

}  // namespace detail

// Sorted set of distinct printable symbols. Letter indices follow the sorted
// order, which is also the lexicographic order used for words.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
    std::sort(symbols_.begin(), symbols_.end());
    if (std::adjacent_find(symbols_.begin(), symbols_.end()) !=
        symbols_.end()) {
      throw AlphabetError("duplicate symbol in alphabet \"" +
                          std::string(symbols) + "\"");
    }
    if (symbols_.empty()) throw AlphabetError("alphabet must be non-empty");
    index_.fill(kNone);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(symbols_[i]);
      if (c <= ' ' || c >= 127) {
        throw AlphabetError("alphabet symbols must be printable ASCII");
      }
      index_[c] = static_cast<std::uint8_t>(i);
    }
  }

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  Symbol symbol(std::size_t letter) const { return symbols_.at(letter); }

  bool contains(Symbol s) const {
    return index_[static_cast<unsigned char>(s)] != kNone;
  }

  std::size_t index(Symbol s) const {
    auto i = index_[static_cast<unsigned char>(s)];
    if (i == kNone) {
      throw AlphabetError(std::string("symbol '") + s +
                          "' not in alphabet {" + symbols_ + "}");
    }
    return i;
  }

  void check_word(const Word& w) const {
    for (Symbol s : w) index(s);
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  static constexpr std::uint8_t kNone = 0xff;
  std::string symbols_;
  std::array<std::uint8_t, 256> index_{};
};

inline void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) {
    throw AlphabetError("alphabet mismatch: {" + a.symbols() + "} vs {" +
                        b.symbols() + "}");
  }
}

// Complete deterministic transition structure (Q, A, ·) with Q = {0..n-1}.
class Semiautomaton {
 public:
  Semiautomaton() = default;

  // delta is row-major: delta[q * |A| + letter].
  Semiautomaton(std::size_t state_count, Alphabet alphabet,
                std::vector<State> delta)
      : n_(state_count), alphabet_(std::move(alphabet)), delta_(std::move(delta)) {
    if (n_ == 0) throw ValidationError("a semiautomaton needs at least one state");
    if (delta_.size() != n_ * alphabet_.size()) {
      throw ValidationError("transition table is not complete");
    }
    for (State t : delta_) {
      if (t >= n_) throw ValidationError("transition target out of range");
    }
  }

  // Builds from one image vector per letter (in alphabet order).
  static Semiautomaton from_actions(const Alphabet& alphabet,
                                    const std::vector<std::vector<State>>& actions) {
    if (actions.size() != alphabet.size()) {
      throw ValidationError("need one action per letter");
    }
    std::size_t n = actions.front().size();
    std::vector<State> delta(n * alphabet.size());
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (actions[a].size() != n) throw ValidationError("ragged actions");
      for (State q = 0; q < n; ++q) delta[q * alphabet.size() + a] = actions[a][q];
    }
    return Semiautomaton(n, alphabet, std::move(delta));
  }

  std::size_t size() const { return n_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t letters() const { return alphabet_.size(); }

  State next(State q, std::size_t letter) const {
    return delta_[q * alphabet_.size() + letter];
  }

  State step(State q, const Word& w) const {
    if (q >= n_) throw ValidationError("state out of range");
    for (Symbol s : w) q = next(q, alphabet_.index(s));
    return q;
  }

  std::vector<State> action(std::size_t letter) const {
    std::vector<State> image(n_);
    for (State q = 0; q < n_; ++q) image[q] = next(q, letter);
    return image;
  }

  const std::vector<State>& table() const { return delta_; }

  friend bool operator==(const Semiautomaton&, const Semiautomaton&) = default;

 private:
  std::size_t n_ = 0;
  Alphabet alphabet_;
  std::vector<State> delta_;
};

// Dense relation on states. Used both for partial orders and for the
// quasiorders produced during minimization.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  static Relation full(std::size_t n) {
    Relation r(n);
    std::fill(r.bits_.begin(), r.bits_.end(), 1);
    return r;
  }

  std::size_t size() const { return n_; }
  bool operator()(State p, State q) const { return bits_[p * n_ + q] != 0; }
  void set(State p, State q, bool v = true) { bits_[p * n_ + q] = v ? 1 : 0; }

  Relation inverse() const {
    Relation r(n_);
    for (State p = 0; p < n_; ++p)
      for (State q = 0; q < n_; ++q) r.set(q, p, (*this)(p, q));
    return r;
  }

  std::size_t pair_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

using StateOrder = Relation;

// (Q, A, ·, ≤). The constructor does not validate; call validate() or use
// checked() when the input is untrusted.
class OrderedSemiautomaton {
 public:
  OrderedSemiautomaton() = default;
  OrderedSemiautomaton(Semiautomaton sa, StateOrder order)
      : sa_(std::move(sa)), order_(std::move(order)) {
    if (order_.size() != sa_.size()) {
      throw ValidationError("order size does not match state count");
    }
  }

  const Semiautomaton& semiautomaton() const { return sa_; }
  const StateOrder& order() const { return order_; }
  const Alphabet& alphabet() const { return sa_.alphabet(); }
  std::size_t size() const { return sa_.size(); }
  std::size_t letters() const { return sa_.letters(); }
  State next(State q, std::size_t letter) const { return sa_.next(q, letter); }
  State step(State q, const Word& w) const { return sa_.step(q, w); }
  bool leq(State p, State q) const { return order_(p, q); }

  friend bool operator==(const OrderedSemiautomaton&,
                         const OrderedSemiautomaton&) = default;

 private:
  Semiautomaton sa_;
  StateOrder order_;
};

// (Q, A, ·, ≤, i, F) with F upward closed.
class OrderedAutomaton {
 public:
  OrderedAutomaton() = default;
  OrderedAutomaton(OrderedSemiautomaton osa, State initial,
                   std::vector<bool> finals)
      : osa_(std::move(osa)), initial_(initial), finals_(std::move(finals)) {
    if (initial_ >= osa_.size()) throw ValidationError("initial state out of range");
    if (finals_.size() != osa_.size()) {
      throw ValidationError("final-state mask does not match state count");
    }
  }

  const OrderedSemiautomaton& osa() const { return osa_; }
  const Semiautomaton& semiautomaton() const { return osa_.semiautomaton(); }
  const StateOrder& order() const { return osa_.order(); }
  const Alphabet& alphabet() const { return osa_.alphabet(); }
  std::size_t size() const { return osa_.size(); }
  std::size_t letters() const { return osa_.letters(); }
  State initial() const { return initial_; }
  bool is_final(State q) const { return finals_[q]; }
  const std::vector<bool>& finals() const { return finals_; }
  State next(State q, std::size_t letter) const { return osa_.next(q, letter); }
  State step(State q, const Word& w) const { return osa_.step(q, w); }
  bool leq(State p, State q) const { return osa_.leq(p, q); }

  friend bool operator==(const OrderedAutomaton&, const OrderedAutomaton&) = default;

 private:
  OrderedSemiautomaton osa_;
  State initial_ = 0;
  std::vector<bool> finals_;
};

inline State step(const Semiautomaton& sa, State q, const Word& w) {
  return sa.step(q, w);
}

inline bool accepts(const OrderedAutomaton& oa, const Word& w) {
  return oa.is_final(oa.step(oa.initial(), w));
}

inline bool future_accepts(const OrderedAutomaton& oa, State q, const Word& w) {
  return oa.is_final(oa.step(q, w));
}

// Violations of the partial-order axioms, one message per offending tuple.
inline std::vector<std::string> validate_order(const StateOrder& le) {
  std::vector<std::string> out;
  const std::size_t n = le.size();
  for (State p = 0; p < n; ++p) {
    if (!le(p, p)) out.push_back("reflexivity: " + std::to_string(p));
  }
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      if (le(p, q) && le(q, p)) {
        out.push_back("antisymmetry: " + std::to_string(p) + "," + std::to_string(q));
      }
    }
  }
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q) {
      if (!le(p, q)) continue;
      for (State r = 0; r < n; ++r) {
        if (le(q, r) && !le(p, r)) {
          out.push_back("transitivity: " + std::to_string(p) + "<=" +
                        std::to_string(q) + "<=" + std::to_string(r));
        }
      }
    }
  return out;
}

inline std::vector<std::string> validate(const OrderedSemiautomaton& osa) {
  auto out = validate_order(osa.order());
  for (State p = 0; p < osa.size(); ++p)
    for (State q = 0; q < osa.size(); ++q) {
      if (p == q || !osa.leq(p, q)) continue;
      for (std::size_t a = 0; a < osa.letters(); ++a) {
        if (!osa.leq(osa.next(p, a), osa.next(q, a))) {
          out.push_back("compatibility: " + std::to_string(p) + "<=" +
                        std::to_string(q) + " but not " +
                        std::to_string(osa.next(p, a)) + "<=" +
                        std::to_string(osa.next(q, a)) + " under '" +
                        osa.alphabet().symbol(a) + "'");
        }
      }
    }
  return out;
}

inline std::vector<std::string> validate(const OrderedAutomaton& oa) {
  auto out = validate(oa.osa());
  for (State p = 0; p < oa.size(); ++p)
    for (State q = 0; q < oa.size(); ++q) {
      if (oa.leq(p, q) && oa.is_final(p) && !oa.is_final(q)) {
        out.push_back("finals not upward closed: p" + std::to_string(p) +
                      "<=p" + std::to_string(q) + ", p" + std::to_string(q) +
                      " not in F");
      }
    }
  return out;
}

template <class T>
T checked(T value) {
  auto violations = validate(value);
  if (!violations.empty()) throw ValidationError(violations.front());
  return value;
}

inline OrderedAutomaton quotient_left(const OrderedAutomaton& oa, const Word& u) {
  return OrderedAutomaton(oa.osa(), oa.step(oa.initial(), u), oa.finals());
}

inline OrderedAutomaton quotient_right(const OrderedAutomaton& oa, const Word& v) {
  oa.alphabet().check_word(v);
  std::vector<bool> fv(oa.size());
  for (State q = 0; q < oa.size(); ++q) fv[q] = oa.is_final(oa.step(q, v));
  return checked(OrderedAutomaton(oa.osa(), oa.initial(), std::move(fv)));
}

inline OrderedSemiautomaton dual(const OrderedSemiautomaton& osa) {
  return OrderedSemiautomaton(osa.semiautomaton(), osa.order().inverse());
}

inline OrderedSemiautomaton discrete(const Semiautomaton& sa) {
  return OrderedSemiautomaton(sa, Relation::identity(sa.size()));
}

// States reachable from q, in breadth-first order with letters in alphabet
// order.
inline std::vector<State> reachable_from(const Semiautomaton& sa, State q) {
  std::vector<State> order{q};
  std::vector<bool> seen(sa.size(), false);
  seen[q] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t a = 0; a < sa.letters(); ++a) {
      State t = sa.next(order[head], a);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

}  // namespace orda
