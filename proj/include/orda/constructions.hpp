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

// Products, disjoint unions, trivial semiautomata, subsemiautomata,
// renamings along letter substitutions, homomorphisms and quotients of
// ordered semiautomata.

#pragma once

#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "orda/core.hpp"
#include "orda/minimize.hpp"
#include "orda/text_format.hpp"
#include "orda/verdict.hpp"

namespace orda {

inline constexpr std::size_t kDefaultProductCap = 1000000;

// Product states are tuples flattened in mixed radix, first component most
// significant.
struct Product {
  OrderedSemiautomaton osa;
  std::vector<std::size_t> radices;

  State encode(std::span<const State> tuple) const {
    State s = 0;
    for (std::size_t j = 0; j < radices.size(); ++j) s = s * radices[j] + tuple[j];
    return s;
  }
  std::vector<State> decode(State s) const {
    std::vector<State> t(radices.size());
    for (std::size_t j = radices.size(); j-- > 0;) {
      t[j] = s % radices[j];
      s /= radices[j];
    }
    return t;
  }
};

inline Product product(std::span<const OrderedSemiautomaton> factors,
                       std::size_t cap = kDefaultProductCap) {
  if (factors.empty()) throw PreconditionError("product of an empty family");
  const Alphabet& alphabet = factors.front().alphabet();
  Product out;
  std::size_t n = 1;
  for (const auto& f : factors) {
    require_same_alphabet(alphabet, f.alphabet());
    if (n > cap / f.size()) {
      throw ResourceError("product exceeds " + std::to_string(cap) + " states");
    }
    n *= f.size();
    out.radices.push_back(f.size());
  }
  const std::size_t k = alphabet.size();
  std::vector<State> delta(n * k);
  std::vector<State> tuple(factors.size());
  for (State s = 0; s < n; ++s) {
    auto t = out.decode(s);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t j = 0; j < factors.size(); ++j) tuple[j] = factors[j].next(t[j], a);
      delta[s * k + a] = out.encode(tuple);
    }
  }
  StateOrder le(n);
  for (State s = 0; s < n; ++s) {
    auto ts = out.decode(s);
    for (State r = 0; r < n; ++r) {
      auto tr = out.decode(r);
      bool below = true;
      for (std::size_t j = 0; j < factors.size() && below; ++j) {
        below = factors[j].leq(ts[j], tr[j]);
      }
      le.set(s, r, below);
    }
  }
  out.osa = OrderedSemiautomaton(Semiautomaton(n, alphabet, std::move(delta)), std::move(le));
  return out;
}

inline Product product(std::initializer_list<OrderedSemiautomaton> factors,
                       std::size_t cap = kDefaultProductCap) {
  std::vector<OrderedSemiautomaton> v(factors);
  return product(std::span<const OrderedSemiautomaton>(v), cap);
}

// States are (component, local) pairs flattened component by component.
struct DisjointUnion {
  OrderedSemiautomaton osa;
  std::vector<std::pair<std::size_t, State>> tags;
  std::vector<State> offsets;

  State index(std::size_t component, State local) const { return offsets[component] + local; }
};

inline DisjointUnion disjoint_union(std::span<const OrderedSemiautomaton> parts) {
  if (parts.empty()) throw PreconditionError("disjoint union of an empty family");
  const Alphabet& alphabet = parts.front().alphabet();
  DisjointUnion out;
  std::size_t n = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    require_same_alphabet(alphabet, parts[j].alphabet());
    out.offsets.push_back(n);
    for (State q = 0; q < parts[j].size(); ++q) out.tags.emplace_back(j, q);
    n += parts[j].size();
  }
  const std::size_t k = alphabet.size();
  std::vector<State> delta(n * k);
  StateOrder le(n);
  for (State s = 0; s < n; ++s) {
    auto [j, q] = out.tags[s];
    for (std::size_t a = 0; a < k; ++a) delta[s * k + a] = out.offsets[j] + parts[j].next(q, a);
    for (State r = 0; r < parts[j].size(); ++r) {
      le.set(s, out.offsets[j] + r, parts[j].leq(q, r));
    }
  }
  out.osa = OrderedSemiautomaton(Semiautomaton(n, alphabet, std::move(delta)), std::move(le));
  return out;
}

inline DisjointUnion disjoint_union(std::initializer_list<OrderedSemiautomaton> parts) {
  std::vector<OrderedSemiautomaton> v(parts);
  return disjoint_union(std::span<const OrderedSemiautomaton>(v));
}

// T_n(A): n fixed points, discrete order.
inline OrderedSemiautomaton trivial(std::size_t n, const Alphabet& alphabet) {
  if (n < 1) throw PreconditionError("trivial semiautomaton needs n >= 1");
  std::vector<State> delta(n * alphabet.size());
  for (State q = 0; q < n; ++q)
    for (std::size_t a = 0; a < alphabet.size(); ++a) delta[q * alphabet.size() + a] = q;
  return OrderedSemiautomaton(Semiautomaton(n, alphabet, std::move(delta)),
                              Relation::identity(n));
}

// Monoid homomorphism f: B* → A* given by the image of each letter of B.
class LetterSubstitution {
 public:
  LetterSubstitution(Alphabet source, Alphabet target, std::vector<Word> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size()) {
      throw ValidationError("every source symbol needs an image");
    }
    for (const auto& w : images_) target_.check_word(w);
  }

  static LetterSubstitution identity(const Alphabet& a) {
    std::vector<Word> images;
    for (Symbol s : a.symbols()) images.emplace_back(1, s);
    return LetterSubstitution(a, a, std::move(images));
  }

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(Symbol b) const { return images_[source_.index(b)]; }
  const Word& image_of_letter(std::size_t letter) const { return images_[letter]; }

  Word apply(const Word& u) const {
    Word out;
    for (Symbol b : u) out += image(b);
    return out;
  }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

// Lines "b -> aab", "b -> _" for λ; '#' comments.
inline LetterSubstitution parse_substitution(std::string_view text, const Alphabet& target) {
  std::map<Symbol, Word> images;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto toks = detail::split_ws(raw);
    if (toks.empty()) continue;
    if (toks.size() != 3 || toks[0].size() != 1 || toks[1] != "->") {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'b -> word'", lineno);
    }
    Word w = toks[2] == "_" ? Word{} : toks[2];
    try {
      target.check_word(w);
    } catch (const AlphabetError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
    if (!images.emplace(toks[0][0], w).second) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate source symbol", lineno);
    }
  }
  if (images.empty()) throw ParseError("substitution has no lines", 0);
  std::string src;
  std::vector<Word> ims;
  for (auto& [b, w] : images) {
    src += b;
    ims.push_back(w);
  }
  return LetterSubstitution(Alphabet(src), target, std::move(ims));
}

// A^f: same states and order, letter b acts as the word f(b).
inline OrderedSemiautomaton f_rename(const OrderedSemiautomaton& osa,
                                     const LetterSubstitution& f) {
  require_same_alphabet(osa.alphabet(), f.target());
  const std::size_t k = f.source().size();
  std::vector<State> delta(osa.size() * k);
  for (State q = 0; q < osa.size(); ++q)
    for (std::size_t b = 0; b < k; ++b) delta[q * k + b] = osa.step(q, f.image_of_letter(b));
  return OrderedSemiautomaton(Semiautomaton(osa.size(), f.source(), std::move(delta)),
                              osa.order());
}

inline OrderedAutomaton f_rename(const OrderedAutomaton& oa, const LetterSubstitution& f) {
  return OrderedAutomaton(f_rename(oa.osa(), f), oa.initial(), oa.finals());
}

class ClosureError : public Error {
 public:
  ClosureError(State state, Symbol letter)
      : Error("subset not closed: state " + std::to_string(state) + " leaves it on '" +
              std::string(1, letter) + "'"),
        state_(state), letter_(letter) {}
  State state() const { return state_; }
  Symbol letter() const { return letter_; }

 private:
  State state_;
  Symbol letter_;
};

struct Subsemiautomaton {
  OrderedSemiautomaton osa;
  // embedding[i] is the state of the parent that local state i stands for.
  std::vector<State> embedding;
};

// Restriction to P (states kept in the listed order).
inline Subsemiautomaton subsemiautomaton(const OrderedSemiautomaton& osa,
                                         std::span<const State> subset) {
  if (subset.empty()) throw PreconditionError("subsemiautomaton needs a non-empty subset");
  std::vector<std::optional<State>> local(osa.size());
  for (State i = 0; i < subset.size(); ++i) {
    if (subset[i] >= osa.size()) throw ValidationError("state out of range");
    if (local[subset[i]]) throw ValidationError("repeated state in subset");
    local[subset[i]] = i;
  }
  const std::size_t m = subset.size();
  const std::size_t k = osa.letters();
  std::vector<State> delta(m * k);
  for (State i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      State t = osa.next(subset[i], a);
      if (!local[t]) throw ClosureError(subset[i], osa.alphabet().symbol(a));
      delta[i * k + a] = *local[t];
    }
  }
  StateOrder le(m);
  for (State i = 0; i < m; ++i)
    for (State j = 0; j < m; ++j) le.set(i, j, osa.leq(subset[i], subset[j]));
  return {OrderedSemiautomaton(Semiautomaton(m, osa.alphabet(), std::move(delta)), std::move(le)),
          std::vector<State>(subset.begin(), subset.end())};
}

// Subsemiautomaton on the states reachable from q; q becomes local state 0.
inline Subsemiautomaton generated(const OrderedSemiautomaton& osa, State q) {
  auto states = reachable_from(osa.semiautomaton(), q);
  return subsemiautomaton(osa, states);
}

struct SemiautomatonHom {
  OrderedSemiautomaton source;
  OrderedSemiautomaton target;
  std::vector<State> map;
};

// Isotone and commuting with every letter: φ(q·a) = φ(q)·a.
inline Verdict check_homomorphism(const SemiautomatonHom& h) {
  const auto& src = h.source;
  const auto& dst = h.target;
  if (!(src.alphabet() == dst.alphabet())) return Verdict::no("alphabets differ");
  if (h.map.size() != src.size()) return Verdict::no("map is not total on the source");
  for (State q = 0; q < src.size(); ++q) {
    if (h.map[q] >= dst.size()) {
      auto v = Verdict::no("map image out of range");
      v.states = {q};
      return v;
    }
  }
  for (State p = 0; p < src.size(); ++p)
    for (State q = 0; q < src.size(); ++q) {
      if (src.leq(p, q) && !dst.leq(h.map[p], h.map[q])) {
        auto v = Verdict::no("not isotone: " + std::to_string(p) + "<=" + std::to_string(q) +
                             " but images " + std::to_string(h.map[p]) + "," +
                             std::to_string(h.map[q]) + " are not ordered");
        v.states = {p, q};
        return v;
      }
    }
  for (State q = 0; q < src.size(); ++q)
    for (std::size_t a = 0; a < src.letters(); ++a) {
      if (h.map[src.next(q, a)] != dst.next(h.map[q], a)) {
        auto v = Verdict::no("does not commute with '" +
                             std::string(1, src.alphabet().symbol(a)) + "' at state " +
                             std::to_string(q));
        v.states = {q};
        v.letters = {src.alphabet().symbol(a)};
        return v;
      }
    }
  return Verdict::yes();
}

inline bool is_surjective(const SemiautomatonHom& h) {
  std::vector<bool> hit(h.target.size(), false);
  for (State t : h.map)
    if (t < hit.size()) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// φ(p) ≤ φ(q) implies p ≤ q.
inline bool is_backward_order_preserving(const SemiautomatonHom& h) {
  for (State p = 0; p < h.source.size(); ++p)
    for (State q = 0; q < h.source.size(); ++q)
      if (h.target.leq(h.map[p], h.map[q]) && !h.source.leq(p, q)) return false;
  return true;
}

struct Quotient {
  OrderedSemiautomaton osa;
  SemiautomatonHom hom;
};

// Quotient by the equivalence p ~ q iff both (p,q) and (q,p) are in rel,
// ordered by rel. Classes are numbered by their smallest member.
inline Quotient quotient_by_precongruence(const OrderedSemiautomaton& osa,
                                          const StatePreorder& rel) {
  const std::size_t n = osa.size();
  if (rel.size() != n) throw ValidationError("relation size does not match state count");
  for (State p = 0; p < n; ++p)
    if (!rel(p, p)) throw ValidationError("quasiorder not reflexive at " + std::to_string(p));
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q) {
      if (!rel(p, q)) continue;
      for (State r = 0; r < n; ++r)
        if (rel(q, r) && !rel(p, r)) {
          throw ValidationError("quasiorder not transitive: " + std::to_string(p) + "," +
                                std::to_string(q) + "," + std::to_string(r));
        }
      for (std::size_t a = 0; a < osa.letters(); ++a)
        if (!rel(osa.next(p, a), osa.next(q, a))) {
          throw ValidationError("quasiorder not compatible: (" + std::to_string(p) + "," +
                                std::to_string(q) + ") under '" +
                                std::string(1, osa.alphabet().symbol(a)) + "'");
        }
    }

  std::vector<State> cls(n);
  std::vector<State> reps;
  for (State p = 0; p < n; ++p) {
    State r = p;
    for (State q = 0; q < p; ++q)
      if (rel(p, q) && rel(q, p)) {
        r = q;
        break;
      }
    if (r == p) {
      cls[p] = reps.size();
      reps.push_back(p);
    } else {
      cls[p] = cls[r];
    }
  }
  const std::size_t m = reps.size();
  const std::size_t k = osa.letters();
  std::vector<State> delta(m * k);
  StateOrder le(m);
  for (State i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < k; ++a) delta[i * k + a] = cls[osa.next(reps[i], a)];
    for (State j = 0; j < m; ++j) le.set(i, j, rel(reps[i], reps[j]));
  }
  OrderedSemiautomaton q(Semiautomaton(m, osa.alphabet(), std::move(delta)), std::move(le));
  return {q, SemiautomatonHom{osa, q, std::move(cls)}};
}

struct UnionEmbedding {
  Product product;  // Q1 × … × Qn × T_n(A)
  DisjointUnion target;
  SemiautomatonHom hom;  // (q1, …, qn, j) ↦ (qj, j)
};

// The disjoint union of the family as a homomorphic image of the product of
// the family with T_n(A).
inline UnionEmbedding union_via_product_embedding(std::span<const OrderedSemiautomaton> parts,
                                                  std::size_t cap = kDefaultProductCap) {
  if (parts.empty()) throw PreconditionError("empty family");
  std::vector<OrderedSemiautomaton> factors(parts.begin(), parts.end());
  factors.push_back(trivial(parts.size(), parts.front().alphabet()));
  UnionEmbedding out{product(std::span<const OrderedSemiautomaton>(factors), cap),
                     disjoint_union(parts), {}};
  std::vector<State> map(out.product.osa.size());
  for (State s = 0; s < map.size(); ++s) {
    auto t = out.product.decode(s);
    std::size_t j = t.back();
    map[s] = out.target.index(j, t[j]);
  }
  out.hom = SemiautomatonHom{out.product.osa, out.target.osa, std::move(map)};
  return out;
}

// Upward closed subsets of the order, one per antichain, as membership masks.
inline std::vector<std::vector<bool>> upward_closed_sets(const StateOrder& le) {
  const std::size_t n = le.size();
  std::vector<std::vector<bool>> out;
  std::vector<State> chosen;
  auto rec = [&](auto&& self, State next) -> void {
    if (next == n) {
      std::vector<bool> up(n, false);
      for (State q = 0; q < n; ++q)
        for (State c : chosen)
          if (le(c, q)) up[q] = true;
      out.push_back(std::move(up));
      return;
    }
    self(self, next + 1);
    bool free = std::none_of(chosen.begin(), chosen.end(), [&](State c) {
      return le(c, next) || le(next, c);
    });
    if (free) {
      chosen.push_back(next);
      self(self, next + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

struct RecognizedLanguages {
  // Minimal ordered automata, pairwise non-isomorphic, in discovery order.
  std::vector<OrderedAutomaton> languages;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultLanguageCap = 10000;

// Every language accepted by completing osa with an initial state and an
// upward closed final set.
inline RecognizedLanguages recognized_languages(const OrderedSemiautomaton& osa,
                                                std::size_t cap = kDefaultLanguageCap) {
  RecognizedLanguages out;
  std::set<std::string> seen;
  auto finals = upward_closed_sets(osa.order());
  for (State i = 0; i < osa.size(); ++i) {
    for (const auto& f : finals) {
      auto m = minimize_ordered(OrderedAutomaton(osa, i, f));
      // Minimal outputs are numbered canonically, so text equality is
      // isomorphism.
      if (seen.insert(format_automaton(m)).second) {
        if (out.languages.size() >= cap) {
          out.truncated = true;
          return out;
        }
        out.languages.push_back(std::move(m));
      }
    }
  }
  return out;
}

// A 1-generated osa (generator i) as a subsemiautomaton of the product of the
// canonical automata of the languages it recognizes from i: q is sent to the
// tuple of its residual classes. Only the image of the product is built.
struct SubproductEmbedding {
  std::vector<OrderedAutomaton> factors;
  // tuples[s] is the product state that image state s stands for.
  std::vector<std::vector<State>> tuples;
  SemiautomatonHom hom;
};

inline SubproductEmbedding embed_into_recognized_product(const OrderedSemiautomaton& osa,
                                                         State generator) {
  if (reachable_from(osa.semiautomaton(), generator).size() != osa.size()) {
    throw PreconditionError("semiautomaton is not generated by state " +
                            std::to_string(generator));
  }
  SubproductEmbedding out;
  std::vector<std::vector<std::optional<State>>> class_maps;
  std::set<std::string> seen;
  for (const auto& f : upward_closed_sets(osa.order())) {
    auto m = minimize_with_map(OrderedAutomaton(osa, generator, f));
    if (!seen.insert(format_automaton(m.automaton)).second) continue;
    out.factors.push_back(std::move(m.automaton));
    class_maps.push_back(std::move(m.class_of));
  }
  const std::size_t n = osa.size();
  std::map<std::vector<State>, State> index;
  std::vector<State> map(n);
  for (State q = 0; q < n; ++q) {
    std::vector<State> t;
    for (const auto& c : class_maps) t.push_back(*c[q]);
    auto [it, inserted] = index.emplace(t, out.tuples.size());
    if (inserted) out.tuples.push_back(std::move(t));
    map[q] = it->second;
  }
  const std::size_t m = out.tuples.size();
  const std::size_t k = osa.letters();
  std::vector<State> delta(m * k);
  for (State s = 0; s < m; ++s)
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<State> t(out.factors.size());
      for (std::size_t j = 0; j < t.size(); ++j) t[j] = out.factors[j].next(out.tuples[s][j], a);
      auto it = index.find(t);
      if (it == index.end()) throw ClosureError(s, osa.alphabet().symbol(a));
      delta[s * k + a] = it->second;
    }
  StateOrder le(m);
  for (State s = 0; s < m; ++s)
    for (State r = 0; r < m; ++r) {
      bool below = true;
      for (std::size_t j = 0; j < out.factors.size() && below; ++j)
        below = out.factors[j].leq(out.tuples[s][j], out.tuples[r][j]);
      le.set(s, r, below);
    }
  out.hom = SemiautomatonHom{
      osa, OrderedSemiautomaton(Semiautomaton(m, osa.alphabet(), std::move(delta)), std::move(le)),
      std::move(map)};
  return out;
}

// osa as a homomorphic image of the disjoint union of its 1-generated
// subsemiautomata, one per state.
struct GeneratedCover {
  DisjointUnion source;
  SemiautomatonHom hom;
};

inline GeneratedCover cover_by_generated(const OrderedSemiautomaton& osa) {
  std::vector<OrderedSemiautomaton> parts;
  std::vector<std::vector<State>> embeddings;
  for (State q = 0; q < osa.size(); ++q) {
    auto g = generated(osa, q);
    parts.push_back(std::move(g.osa));
    embeddings.push_back(std::move(g.embedding));
  }
  auto u = disjoint_union(std::span<const OrderedSemiautomaton>(parts));
  std::vector<State> map(u.osa.size());
  for (State s = 0; s < map.size(); ++s) {
    auto [j, local] = u.tags[s];
    map[s] = embeddings[j][local];
  }
  SemiautomatonHom h{u.osa, osa, std::move(map)};
  return {std::move(u), std::move(h)};
}

// Isomorphism of ordered semiautomata (no distinguished states), by
// backtracking with propagation along transitions.
inline std::optional<std::vector<State>> semiautomaton_isomorphism(
    const OrderedSemiautomaton& a, const OrderedSemiautomaton& b) {
  if (a.size() != b.size() || !(a.alphabet() == b.alphabet())) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<std::optional<State>> map(n);
  std::vector<bool> used(n, false);

  auto consistent = [&]() {
    for (State p = 0; p < n; ++p) {
      if (!map[p]) continue;
      for (State q = 0; q < n; ++q)
        if (map[q] && a.leq(p, q) != b.leq(*map[p], *map[q])) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self) -> bool {
    State p = 0;
    while (p < n && map[p]) ++p;
    if (p == n) return true;
    for (State q = 0; q < n; ++q) {
      if (used[q]) continue;
      auto saved_map = map;
      auto saved_used = used;
      bool ok = true;
      std::vector<std::pair<State, State>> work{{p, q}};
      while (!work.empty() && ok) {
        auto [x, y] = work.back();
        work.pop_back();
        if (map[x]) {
          ok = *map[x] == y;
          continue;
        }
        if (used[y]) {
          ok = false;
          continue;
        }
        map[x] = y;
        used[y] = true;
        for (std::size_t l = 0; l < a.letters(); ++l) work.emplace_back(a.next(x, l), b.next(y, l));
      }
      if (ok && consistent() && self(self)) return true;
      map = std::move(saved_map);
      used = std::move(saved_used);
    }
    return false;
  };
  if (!rec(rec)) return std::nullopt;
  std::vector<State> out(n);
  for (State p = 0; p < n; ++p) out[p] = *map[p];
  return out;
}

inline bool isomorphic(const OrderedSemiautomaton& a, const OrderedSemiautomaton& b) {
  return semiautomaton_isomorphism(a, b).has_value();
}

}  // namespace orda
