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

// Line-oriented automaton format:
//
//   alphabet: a b
//   states: 2
//   initial: 0
//   finals: 1
//   order: 0 <= 1
//   trans: 0 a 1
//
// '#' starts a comment. Without order lines the order is discrete; the
// reflexive pairs are implied, everything else must be listed explicitly.

#pragma once

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orda/core.hpp"

namespace orda {

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected a number, got '" +
                         tok + "'",
                     line);
  }
  return v;
}

}  // namespace detail

inline OrderedAutomaton parse_automaton(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> states;
  std::optional<State> initial;
  std::optional<std::vector<State>> finals;
  std::vector<std::pair<State, State>> order_pairs;
  struct Trans {
    State from;
    Symbol sym;
    State to;
    std::size_t line;
  };
  std::vector<Trans> trans;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + msg, lineno);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    auto colon = toks[0].find(':');
    if (colon == std::string::npos) throw fail("expected 'key:'");
    std::string key = toks[0].substr(0, colon);
    // Allow "key:value" without a space.
    if (colon + 1 < toks[0].size()) {
      toks.insert(toks.begin() + 1, toks[0].substr(colon + 1));
    }
    std::vector<std::string> args(toks.begin() + 1, toks.end());

    if (key == "alphabet") {
      if (alphabet) throw fail("duplicate alphabet line");
      std::string syms;
      for (const auto& a : args) {
        if (a.size() != 1) throw fail("symbols must be single characters: '" + a + "'");
        syms += a;
      }
      try {
        alphabet = Alphabet(syms);
      } catch (const AlphabetError& e) {
        throw fail(e.what());
      }
    } else if (key == "states") {
      if (states) throw fail("duplicate states line");
      if (args.size() != 1) throw fail("states takes one number");
      states = detail::parse_index(args[0], lineno);
      if (*states == 0) throw fail("states must be positive");
    } else if (key == "initial") {
      if (initial) throw fail("duplicate initial line");
      if (args.size() != 1) throw fail("initial takes one state");
      initial = detail::parse_index(args[0], lineno);
    } else if (key == "finals") {
      if (!finals) finals.emplace();
      for (const auto& a : args) finals->push_back(detail::parse_index(a, lineno));
    } else if (key == "order") {
      if (args.size() != 3 || args[1] != "<=") throw fail("expected 'order: p <= q'");
      order_pairs.emplace_back(detail::parse_index(args[0], lineno),
                               detail::parse_index(args[2], lineno));
    } else if (key == "trans") {
      if (args.size() != 3 || args[1].size() != 1) {
        throw fail("expected 'trans: p a q'");
      }
      trans.push_back({detail::parse_index(args[0], lineno), args[1][0],
                       detail::parse_index(args[2], lineno), lineno});
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }

  lineno = 0;
  if (!alphabet) throw fail("missing alphabet line");
  if (!states) throw fail("missing states line");
  if (!initial) throw fail("missing initial line");
  const std::size_t n = *states;
  const std::size_t k = alphabet->size();
  if (*initial >= n) throw fail("initial state out of range");

  std::vector<State> delta(n * k);
  std::vector<bool> defined(n * k, false);
  for (const auto& t : trans) {
    lineno = t.line;
    if (t.from >= n || t.to >= n) throw fail("state out of range");
    if (!alphabet->contains(t.sym)) {
      throw fail(std::string("symbol '") + t.sym + "' not in alphabet");
    }
    std::size_t slot = t.from * k + alphabet->index(t.sym);
    if (defined[slot]) throw fail("duplicate transition");
    defined[slot] = true;
    delta[slot] = t.to;
  }
  lineno = 0;
  for (std::size_t slot = 0; slot < n * k; ++slot) {
    if (!defined[slot]) {
      throw fail("missing transition for state " + std::to_string(slot / k) +
                 " on '" + alphabet->symbol(slot % k) + "'");
    }
  }

  StateOrder le = Relation::identity(n);
  for (auto [p, q] : order_pairs) {
    if (p >= n || q >= n) throw fail("order state out of range");
    le.set(p, q);
  }
  std::vector<bool> fin(n, false);
  if (finals) {
    for (State f : *finals) {
      if (f >= n) throw fail("final state out of range");
      fin[f] = true;
    }
  }

  OrderedAutomaton oa(OrderedSemiautomaton(Semiautomaton(n, *alphabet, delta), le),
                      *initial, fin);
  auto violations = validate(oa);
  if (!violations.empty()) throw ValidationError(violations.front());
  return oa;
}

inline std::string format_automaton(const OrderedAutomaton& oa) {
  std::ostringstream out;
  out << "alphabet:";
  for (Symbol s : oa.alphabet().symbols()) out << ' ' << s;
  out << "\nstates: " << oa.size() << "\ninitial: " << oa.initial() << "\nfinals:";
  for (State q = 0; q < oa.size(); ++q)
    if (oa.is_final(q)) out << ' ' << q;
  out << '\n';
  for (State p = 0; p < oa.size(); ++p)
    for (State q = 0; q < oa.size(); ++q)
      if (p != q && oa.leq(p, q)) out << "order: " << p << " <= " << q << '\n';
  for (State p = 0; p < oa.size(); ++p)
    for (std::size_t a = 0; a < oa.letters(); ++a)
      out << "trans: " << p << ' ' << oa.alphabet().symbol(a) << ' '
          << oa.next(p, a) << '\n';
  return out.str();
}

// Graphviz rendering. Order edges (Hasse diagram only) are dashed.
inline std::string format_dot(const OrderedAutomaton& oa) {
  std::ostringstream out;
  out << "digraph orda {\n  rankdir=LR;\n  start [shape=point];\n";
  for (State q = 0; q < oa.size(); ++q) {
    out << "  " << q << " [shape=" << (oa.is_final(q) ? "doublecircle" : "circle")
        << "];\n";
  }
  out << "  start -> " << oa.initial() << ";\n";
  for (State p = 0; p < oa.size(); ++p) {
    for (State q = 0; q < oa.size(); ++q) {
      std::string label;
      for (std::size_t a = 0; a < oa.letters(); ++a) {
        if (oa.next(p, a) != q) continue;
        if (!label.empty()) label += ',';
        label += oa.alphabet().symbol(a);
      }
      if (!label.empty()) out << "  " << p << " -> " << q << " [label=\"" << label << "\"];\n";
    }
  }
  for (State p = 0; p < oa.size(); ++p)
    for (State q = 0; q < oa.size(); ++q) {
      if (p == q || !oa.leq(p, q)) continue;
      bool covered = true;
      for (State r = 0; r < oa.size() && covered; ++r) {
        if (r != p && r != q && oa.leq(p, r) && oa.leq(r, q)) covered = false;
      }
      if (covered) out << "  " << p << " -> " << q << " [style=dashed,arrowhead=none];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace orda
