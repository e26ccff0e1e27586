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

// ω-inequalities u ≤ v (or u = v) over an ordered semiautomaton, checked with
// respect to a category of homomorphisms f: X* → A*. The inequality holds when
// p·f(u) ≤ p·f(v) for every admissible f and every state p.
//
// Only the action of f(x) matters, so substitutions range over transition
// monoid elements, each carrying a witness word. Every counterexample is
// re-run letter by letter on the semiautomaton before it is reported.
//
// Query syntax:
//
//   query    := term ("<=" | "==") term ["@all" | "@ne" | "@lp" | "@surj" | "@lm"]
//   term     := factor+
//   factor   := atom ("^w")*
//   atom     := "1" | variable | "(" term ")"
//   variable := letter (letter | digit)*

#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orda/core.hpp"
#include "orda/monoid.hpp"
#include "orda/verdict.hpp"

namespace orda {

class OmegaTerm {
 public:
  enum class Kind { kUnit, kVariable, kConcat, kOmega };

  static OmegaTerm unit() { return OmegaTerm(Kind::kUnit, {}, {}); }
  static OmegaTerm variable(std::string name) {
    return OmegaTerm(Kind::kVariable, std::move(name), {});
  }
  // Nested concatenations are flattened; a single factor is returned as is.
  static OmegaTerm concat(const std::vector<OmegaTerm>& factors) {
    std::vector<OmegaTerm> flat;
    for (const auto& f : factors) {
      if (f.kind_ == Kind::kConcat) {
        flat.insert(flat.end(), f.kids_.begin(), f.kids_.end());
      } else {
        flat.push_back(f);
      }
    }
    if (flat.empty()) return unit();
    if (flat.size() == 1) return flat.front();
    return OmegaTerm(Kind::kConcat, {}, std::move(flat));
  }
  static OmegaTerm omega(const OmegaTerm& base) { return OmegaTerm(Kind::kOmega, {}, {base}); }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<OmegaTerm>& children() const { return kids_; }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    collect(out);
    return out;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::kUnit:
        return "1";
      case Kind::kVariable:
        return name_;
      case Kind::kConcat: {
        std::string out;
        for (const auto& k : kids_) {
          if (!out.empty()) out += ' ';
          out += k.to_string();
        }
        return out;
      }
      case Kind::kOmega: {
        const auto& base = kids_.front();
        if (base.kind_ == Kind::kConcat) return "(" + base.to_string() + ")^w";
        return base.to_string() + "^w";
      }
    }
    return {};
  }

  friend bool operator==(const OmegaTerm& a, const OmegaTerm& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_ && a.kids_ == b.kids_;
  }

 private:
  OmegaTerm(Kind kind, std::string name, std::vector<OmegaTerm> kids)
      : kind_(kind), name_(std::move(name)), kids_(std::move(kids)) {}

  void collect(std::set<std::string>& out) const {
    if (kind_ == Kind::kVariable) out.insert(name_);
    for (const auto& k : kids_) k.collect(out);
  }

  Kind kind_;
  std::string name_;
  std::vector<OmegaTerm> kids_;
};

enum class Category { kAll, kNonErasing, kLengthPreserving, kSurjective, kLengthMultiplying };

inline const char* category_name(Category c) {
  switch (c) {
    case Category::kAll:
      return "all";
    case Category::kNonErasing:
      return "ne";
    case Category::kLengthPreserving:
      return "lp";
    case Category::kSurjective:
      return "surj";
    case Category::kLengthMultiplying:
      return "lm";
  }
  return "";
}

inline Category parse_category(std::string_view name) {
  for (Category c : {Category::kAll, Category::kNonErasing, Category::kLengthPreserving,
                     Category::kSurjective, Category::kLengthMultiplying})
    if (name == category_name(c)) return c;
  throw ParseError("unknown category '" + std::string(name) + "'", 0);
}

enum class Comparison { kLeq, kEq };

struct OmegaQuery {
  OmegaTerm left = OmegaTerm::unit();
  OmegaTerm right = OmegaTerm::unit();
  Comparison relation = Comparison::kLeq;
  Category category = Category::kAll;

  std::vector<std::string> variables() const {
    auto vars = left.variables();
    auto rv = right.variables();
    vars.insert(rv.begin(), rv.end());
    return {vars.begin(), vars.end()};
  }

  std::string to_string() const {
    return left.to_string() + (relation == Comparison::kLeq ? " <= " : " == ") +
           right.to_string() + " @" + category_name(category);
  }
};

namespace detail {

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  OmegaQuery parse() {
    OmegaQuery q;
    q.left = term();
    skip();
    if (text_.substr(pos_, 2) == "<=") {
      q.relation = Comparison::kLeq;
    } else if (text_.substr(pos_, 2) == "==") {
      q.relation = Comparison::kEq;
    } else {
      fail("expected '<=' or '=='");
    }
    pos_ += 2;
    q.right = term();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '@') {
      std::size_t start = ++pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      try {
        q.category = parse_category(name);
      } catch (const ParseError&) {
        pos_ = start;
        fail("unknown category '" + name + "'");
      }
      skip();
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("query column " + std::to_string(pos_ + 1) + ": " + what, pos_ + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '1' || c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  OmegaTerm term() {
    std::vector<OmegaTerm> factors;
    while (at_atom()) factors.push_back(factor());
    if (factors.empty()) fail("expected a term");
    return OmegaTerm::concat(factors);
  }

  OmegaTerm factor() {
    OmegaTerm t = atom();
    while (pos_ < text_.size() && text_[pos_] == '^') {
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != 'w') fail("expected 'w' after '^'");
      pos_ += 2;
      t = OmegaTerm::omega(t);
    }
    return t;
  }

  OmegaTerm atom() {
    char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return OmegaTerm::unit();
    }
    if (c == '(') {
      ++pos_;
      OmegaTerm t = term();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return OmegaTerm::variable(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline OmegaQuery parse_query(std::string_view text) { return detail::QueryParser(text).parse(); }

// Variables are kept sorted; words[i] acts as values[i].
struct Substitution {
  std::vector<std::string> variables;
  std::vector<Element> values;
  std::vector<Word> words;

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = std::lower_bound(variables.begin(), variables.end(), name);
    if (it == variables.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (i) out += ' ';
      out += variables[i] + "=" + detail::word_repr(words[i]);
    }
    return out;
  }
};

inline Element eval_term(const TransitionMonoid& tm, const OmegaTerm& t, const Substitution& s) {
  switch (t.kind()) {
    case OmegaTerm::Kind::kUnit:
      return tm.identity();
    case OmegaTerm::Kind::kVariable: {
      auto i = s.find(t.name());
      if (!i) throw PreconditionError("unbound variable '" + t.name() + "'");
      return s.values[*i];
    }
    case OmegaTerm::Kind::kConcat: {
      Element e = tm.identity();
      for (const auto& k : t.children()) e = tm.compose(e, eval_term(tm, k, s));
      return e;
    }
    case OmegaTerm::Kind::kOmega:
      return tm.omega_power(eval_term(tm, t.children().front(), s));
  }
  return tm.identity();
}

// Elements acting as some non-empty word, ascending.
inline std::vector<Element> nonempty_realizable(const TransitionMonoid& tm) {
  auto in = tm.semigroup_elements();
  std::vector<Element> out;
  for (Element e = 0; e < in.size(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

// Length-lex least non-empty word per element, if any.
inline std::vector<std::optional<Word>> nonempty_witnesses(const TransitionMonoid& tm) {
  std::vector<std::optional<Word>> out(tm.size());
  std::vector<Element> queue;
  for (std::size_t a = 0; a < tm.alphabet().size(); ++a) {
    Element g = tm.generator(a);
    if (!out[g]) {
      out[g] = Word(1, tm.alphabet().symbol(a));
      queue.push_back(g);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t a = 0; a < tm.alphabet().size(); ++a) {
      Element t = tm.right(queue[head], a);
      if (!out[t]) {
        out[t] = *out[queue[head]] + tm.alphabet().symbol(a);
        queue.push_back(t);
      }
    }
  return out;
}

// A subset of ℕ that is periodic beyond a threshold. Below the threshold
// membership is listed explicitly; from the threshold on, k is a member iff
// residues[k mod period]. Period 0 means no member at or above the threshold.
struct EventuallyPeriodicSet {
  std::vector<bool> prefix;
  std::size_t period = 0;
  std::vector<bool> residues;

  std::size_t threshold() const { return prefix.size(); }

  bool contains(std::size_t k) const {
    if (k < prefix.size()) return prefix[k];
    if (period == 0) return false;
    return residues[k % period];
  }
};

inline constexpr std::size_t kDefaultLengthSetCap = std::size_t{1} << 16;

// Lengths of words acting as m: the unary projection of the monoid automaton
// determinizes to a lasso S_0, S_1, … of element sets.
inline EventuallyPeriodicSet length_set(const TransitionMonoid& tm, Element m,
                                        std::size_t cap = kDefaultLengthSetCap) {
  std::vector<bool> cur(tm.size(), false);
  cur[tm.identity()] = true;
  std::map<std::vector<bool>, std::size_t> seen;
  std::vector<std::vector<bool>> sets;
  while (true) {
    auto [it, inserted] = seen.emplace(cur, sets.size());
    if (!inserted) {
      const std::size_t start = it->second;
      EventuallyPeriodicSet out;
      out.period = sets.size() - start;
      for (std::size_t k = 0; k < start; ++k) out.prefix.push_back(sets[k][m]);
      out.residues.assign(out.period, false);
      for (std::size_t k = start; k < sets.size(); ++k) out.residues[k % out.period] = sets[k][m];
      return out;
    }
    if (sets.size() >= cap) throw ResourceError("length set exceeds subset cap");
    sets.push_back(cur);
    std::vector<bool> next(tm.size(), false);
    for (Element e = 0; e < tm.size(); ++e)
      if (cur[e])
        for (std::size_t a = 0; a < tm.alphabet().size(); ++a) next[tm.right(e, a)] = true;
    cur = std::move(next);
  }
}

// Smallest k ≥ 1 lying in every set. Beyond the largest threshold membership
// is periodic with the lcm of the periods, so the search stops there.
inline std::optional<std::size_t> common_length(const std::vector<EventuallyPeriodicSet>& sets,
                                                std::size_t cap = std::size_t{1} << 24) {
  std::size_t threshold = 1, l = 1;
  for (const auto& s : sets) {
    threshold = std::max(threshold, s.threshold());
    if (s.period != 0) {
      l = std::lcm(l, s.period);
      if (l > cap) throw ResourceError("length-set period lcm exceeds cap");
    }
  }
  for (std::size_t k = 1; k <= threshold + l; ++k) {
    bool all = true;
    for (const auto& s : sets) all = all && s.contains(k);
    if (all) return k;
  }
  return std::nullopt;
}

// Lexicographically least word of length k acting as m, if any.
inline std::optional<Word> word_of_length(const TransitionMonoid& tm, Element m, std::size_t k) {
  const std::size_t size = tm.size();
  const std::size_t letters = tm.alphabet().size();
  // good[i][e]: some word of length k - i leads from e to m.
  std::vector<std::vector<bool>> good(k + 1, std::vector<bool>(size, false));
  good[k][m] = true;
  for (std::size_t i = k; i-- > 0;)
    for (Element e = 0; e < size; ++e)
      for (std::size_t a = 0; a < letters && !good[i][e]; ++a) good[i][e] = good[i + 1][tm.right(e, a)];
  if (!good[0][tm.identity()]) return std::nullopt;
  Word w;
  Element cur = tm.identity();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < letters; ++a)
      if (good[i + 1][tm.right(cur, a)]) {
        cur = tm.right(cur, a);
        w.push_back(tm.alphabet().symbol(a));
        break;
      }
  return w;
}

inline constexpr std::size_t kDefaultSubstitutionCap = 10000000;

struct EnumerationStats {
  std::size_t candidates = 0;
  std::size_t valid = 0;
};

namespace detail {

// Injective g: letters → variables with values[g(a)] = action(a), by
// augmenting paths. Returns the variable assigned to each letter.
inline std::optional<std::vector<std::size_t>> letter_matching(const TransitionMonoid& tm,
                                                               const std::vector<Element>& values) {
  const std::size_t k = tm.alphabet().size();
  std::vector<std::size_t> owner(values.size(), SIZE_MAX), assigned(k, SIZE_MAX);
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<bool> visited(values.size(), false);
    auto augment = [&](auto&& self, std::size_t letter) -> bool {
      for (std::size_t x = 0; x < values.size(); ++x) {
        if (values[x] != tm.generator(letter) || visited[x]) continue;
        visited[x] = true;
        if (owner[x] == SIZE_MAX || self(self, owner[x])) {
          owner[x] = letter;
          assigned[letter] = x;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, a)) return std::nullopt;
  }
  return assigned;
}

}  // namespace detail

// Calls visit on every admissible substitution in lexicographic order of the
// value tuple (first variable most significant) until visit returns false.
inline EnumerationStats for_each_substitution(
    const TransitionMonoid& tm, const std::vector<std::string>& variables, Category category,
    const std::function<bool(const Substitution&)>& visit,
    std::size_t cap = kDefaultSubstitutionCap) {
  const std::size_t v = variables.size();
  const std::size_t letters = tm.alphabet().size();

  // Candidate values per variable (identical for every variable).
  std::vector<Element> choices;
  std::vector<Word> choice_words;
  if (category == Category::kLengthPreserving) {
    for (std::size_t a = 0; a < letters; ++a) {
      choices.push_back(tm.generator(a));
      choice_words.emplace_back(1, tm.alphabet().symbol(a));
    }
  } else if (category == Category::kNonErasing) {
    auto words = nonempty_witnesses(tm);
    for (Element e = 0; e < tm.size(); ++e)
      if (words[e]) {
        choices.push_back(e);
        choice_words.push_back(*words[e]);
      }
  } else {
    for (Element e = 0; e < tm.size(); ++e) {
      choices.push_back(e);
      choice_words.push_back(tm.witness(e));
    }
  }

  std::size_t total = 1;
  for (std::size_t i = 0; i < v; ++i) {
    if (choices.empty()) {
      total = 0;
      break;
    }
    if (total > cap / choices.size()) {
      throw ResourceError("substitution count exceeds " + std::to_string(cap));
    }
    total *= choices.size();
  }

  std::map<Element, EventuallyPeriodicSet> lengths;
  auto length_of = [&](Element e) -> const EventuallyPeriodicSet& {
    auto it = lengths.find(e);
    if (it == lengths.end()) it = lengths.emplace(e, length_set(tm, e)).first;
    return it->second;
  };

  EnumerationStats stats;
  std::vector<std::size_t> digits(v, 0);
  Substitution s;
  s.variables = variables;
  for (std::size_t n = 0; n < total; ++n) {
    if (n > 0) {
      for (std::size_t i = v; i-- > 0;) {
        if (++digits[i] < choices.size()) break;
        digits[i] = 0;
      }
    }
    ++stats.candidates;
    s.values.resize(v);
    s.words.resize(v);
    for (std::size_t i = 0; i < v; ++i) {
      s.values[i] = choices[digits[i]];
      s.words[i] = choice_words[digits[i]];
    }
    if (category == Category::kSurjective) {
      auto match = detail::letter_matching(tm, s.values);
      if (!match) continue;
      for (std::size_t a = 0; a < letters; ++a) s.words[(*match)[a]] = Word(1, tm.alphabet().symbol(a));
    } else if (category == Category::kLengthMultiplying) {
      std::vector<EventuallyPeriodicSet> sets;
      for (Element e : s.values) sets.push_back(length_of(e));
      auto k = common_length(sets);
      if (!k) continue;
      for (std::size_t i = 0; i < v; ++i) s.words[i] = *word_of_length(tm, s.values[i], *k);
    }
    ++stats.valid;
    if (!visit(s)) break;
  }
  return stats;
}

inline std::vector<Substitution> valid_substitutions(const TransitionMonoid& tm,
                                                     const std::vector<std::string>& variables,
                                                     Category category,
                                                     std::size_t cap = kDefaultSubstitutionCap) {
  std::vector<Substitution> out;
  for_each_substitution(
      tm, variables, category,
      [&](const Substitution& s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}

// f(t) as a literal word, with each ω replaced by the exponent of its operand.
inline Word expand_term(const TransitionMonoid& tm, const OmegaTerm& t, const Substitution& s) {
  switch (t.kind()) {
    case OmegaTerm::Kind::kUnit:
      return {};
    case OmegaTerm::Kind::kVariable:
      return s.words[*s.find(t.name())];
    case OmegaTerm::Kind::kConcat: {
      Word w;
      for (const auto& k : t.children()) w += expand_term(tm, k, s);
      return w;
    }
    case OmegaTerm::Kind::kOmega: {
      const auto& base = t.children().front();
      Word once = expand_term(tm, base, s);
      Word w;
      for (std::size_t i = tm.omega_exponent(eval_term(tm, base, s)); i > 0; --i) w += once;
      return w;
    }
  }
  return {};
}

struct CheckOptions {
  std::size_t monoid_cap = kDefaultMonoidCap;
  std::size_t substitution_cap = kDefaultSubstitutionCap;
};

inline Verdict check(const OrderedSemiautomaton& osa, const OmegaQuery& q,
                     const CheckOptions& opts = {}) {
  auto tm = TransitionMonoid::build(osa, opts.monoid_cap);
  auto violates = [&](State l, State r) {
    return q.relation == Comparison::kLeq ? !osa.leq(l, r) : l != r;
  };
  std::optional<Verdict> failure;
  auto stats = for_each_substitution(
      tm, q.variables(), q.category,
      [&](const Substitution& s) {
        Element l = eval_term(tm, q.left, s), r = eval_term(tm, q.right, s);
        for (State p = 0; p < osa.size(); ++p) {
          if (!violates(tm.apply(p, l), tm.apply(p, r))) continue;
          Word lw = expand_term(tm, q.left, s), rw = expand_term(tm, q.right, s);
          if (!violates(osa.step(p, lw), osa.step(p, rw))) {
            throw std::logic_error("omega counterexample failed literal re-check");
          }
          Verdict v = Verdict::no(s.to_string() + " at state " + std::to_string(p));
          v.states = {p};
          v.words = s.words;
          failure = std::move(v);
          return false;
        }
        return true;
      },
      opts.substitution_cap);
  if (failure) return *failure;
  Verdict v = Verdict::yes(std::to_string(stats.valid) + " substitutions");
  v.vacuous = stats.valid == 0;
  if (v.vacuous) v.detail = "vacuous: no admissible substitution";
  return v;
}

struct CatalogSummary {
  Verdict aperiodic;   // x^ω x = x^ω
  Verdict r_trivial;   // (xy)^ω x = (xy)^ω
  Verdict j_trivial;   // additionally y(xy)^ω = (xy)^ω
};

inline CatalogSummary check_identity_catalog(const Semiautomaton& sa,
                                             const CheckOptions& opts = {}) {
  auto osa = discrete(sa);
  CatalogSummary out;
  out.aperiodic = check(osa, parse_query("x^w x == x^w @all"), opts);
  out.r_trivial = check(osa, parse_query("(x y)^w x == (x y)^w @all"), opts);
  out.j_trivial = !out.r_trivial ? out.r_trivial
                                 : check(osa, parse_query("y (x y)^w == (x y)^w @all"), opts);
  return out;
}

}  // namespace orda
