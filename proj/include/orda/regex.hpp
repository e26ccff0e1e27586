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

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "orda/core.hpp"

namespace orda {

// Extended regular expressions. Values are immutable and always in normal
// form: unions and intersections are flattened, sorted and deduplicated,
// concatenations are flattened, and the usual unit/annihilator laws for
// ∅, λ and ¬∅ are applied. Two expressions that normalize to the same tree
// are "similar"; a regular language has finitely many dissimilar
// derivatives.
class Regex {
 public:
  enum class Kind { kEmpty, kEpsilon, kSymbol, kUnion, kIntersection, kConcat, kStar, kComplement };

  static Regex empty() { return Regex(make(Kind::kEmpty, 0, {})); }
  static Regex epsilon() { return Regex(make(Kind::kEpsilon, 0, {})); }
  static Regex symbol(Symbol s) { return Regex(make(Kind::kSymbol, s, {})); }
  static Regex any_word() { return complement(empty()); }

  static Regex union_of(std::vector<Regex> parts) {
    std::vector<Regex> flat;
    for (auto& p : parts) {
      if (p.kind() == Kind::kUnion) {
        flat.insert(flat.end(), p.node_->kids.begin(), p.node_->kids.end());
      } else if (p.kind() != Kind::kEmpty) {
        flat.push_back(p);
      }
    }
    for (const auto& p : flat) {
      if (p.is_any_word()) return any_word();
    }
    sort_unique(flat);
    if (flat.empty()) return empty();
    if (flat.size() == 1) return flat.front();
    return Regex(make(Kind::kUnion, 0, std::move(flat)));
  }

  static Regex intersection_of(std::vector<Regex> parts) {
    std::vector<Regex> flat;
    for (auto& p : parts) {
      if (p.kind() == Kind::kIntersection) {
        flat.insert(flat.end(), p.node_->kids.begin(), p.node_->kids.end());
      } else if (!p.is_any_word()) {
        flat.push_back(p);
      }
    }
    for (const auto& p : flat) {
      if (p.kind() == Kind::kEmpty) return empty();
    }
    sort_unique(flat);
    if (flat.empty()) return any_word();
    if (flat.size() == 1) return flat.front();
    return Regex(make(Kind::kIntersection, 0, std::move(flat)));
  }

  static Regex concat_of(std::vector<Regex> parts) {
    std::vector<Regex> flat;
    for (auto& p : parts) {
      if (p.kind() == Kind::kEmpty) return empty();
      if (p.kind() == Kind::kConcat) {
        flat.insert(flat.end(), p.node_->kids.begin(), p.node_->kids.end());
      } else if (p.kind() != Kind::kEpsilon) {
        flat.push_back(p);
      }
    }
    if (flat.empty()) return epsilon();
    if (flat.size() == 1) return flat.front();
    return Regex(make(Kind::kConcat, 0, std::move(flat)));
  }

  static Regex star(const Regex& r) {
    if (r.kind() == Kind::kStar) return r;
    if (r.kind() == Kind::kEmpty || r.kind() == Kind::kEpsilon) return epsilon();
    return Regex(make(Kind::kStar, 0, {r}));
  }

  static Regex complement(const Regex& r) {
    if (r.kind() == Kind::kComplement) return r.node_->kids.front();
    return Regex(make(Kind::kComplement, 0, {r}));
  }

  Kind kind() const { return node_->kind; }
  Symbol sym() const { return node_->sym; }
  const std::vector<Regex>& children() const { return node_->kids; }
  bool is_any_word() const {
    return kind() == Kind::kComplement && node_->kids.front().kind() == Kind::kEmpty;
  }

  // Total structural order; used for ACI sorting and as state identity.
  friend int compare(const Regex& a, const Regex& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (a.sym() != b.sym()) return a.sym() < b.sym() ? -1 : 1;
    const auto& x = a.children();
    const auto& y = b.children();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      if (int c = compare(x[i], y[i]); c != 0) return c;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
  }
  friend bool operator==(const Regex& a, const Regex& b) { return compare(a, b) == 0; }
  friend bool operator<(const Regex& a, const Regex& b) { return compare(a, b) < 0; }

  std::string to_string() const {
    std::string out;
    print(out, 0);
    return out;
  }

 private:
  struct Node {
    Kind kind;
    Symbol sym;
    std::vector<Regex> kids;
  };

  explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> make(Kind k, Symbol s, std::vector<Regex> kids) {
    return std::make_shared<const Node>(Node{k, s, std::move(kids)});
  }

  static void sort_unique(std::vector<Regex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // Binding strength: union 0, intersection 1, concatenation 2, star 3,
  // complement 4, atoms 5.
  int precedence() const {
    switch (kind()) {
      case Kind::kUnion: return 0;
      case Kind::kIntersection: return 1;
      case Kind::kConcat: return 2;
      case Kind::kStar: return 3;
      case Kind::kComplement: return 4;
      default: return 5;
    }
  }

  void print_child(std::string& out, const Regex& child, int min_prec) const {
    if (child.precedence() < min_prec) {
      out += '(';
      child.print(out, 0);
      out += ')';
    } else {
      child.print(out, min_prec);
    }
  }

  void print(std::string& out, int) const {
    switch (kind()) {
      case Kind::kEmpty: out += '#'; break;
      case Kind::kEpsilon: out += '_'; break;
      case Kind::kSymbol: out += sym(); break;
      case Kind::kUnion:
      case Kind::kIntersection: {
        const char op = kind() == Kind::kUnion ? '|' : '&';
        for (std::size_t i = 0; i < children().size(); ++i) {
          if (i) out += op;
          print_child(out, children()[i], precedence() + 1);
        }
        break;
      }
      case Kind::kConcat:
        for (const auto& c : children()) print_child(out, c, 3);
        break;
      case Kind::kStar:
        print_child(out, children().front(), 4);
        out += '*';
        break;
      case Kind::kComplement:
        out += '!';
        print_child(out, children().front(), 5);
        break;
    }
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline bool is_reserved(char c) {
  switch (c) {
    case '(': case ')': case '|': case '&': case '*': case '!': case '#': case '_':
      return true;
    default:
      return false;
  }
}

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet* alphabet)
      : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    Regex r = parse_union();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError("regex column " + std::to_string(pos_ + 1) + ": " + msg, pos_ + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '!' || c == '#' || c == '_' || !is_reserved(c);
  }

  Regex parse_union() {
    std::vector<Regex> parts{parse_intersection()};
    while (peek('|')) {
      ++pos_;
      parts.push_back(parse_intersection());
    }
    return Regex::union_of(std::move(parts));
  }

  Regex parse_intersection() {
    std::vector<Regex> parts{parse_concat()};
    while (peek('&')) {
      ++pos_;
      parts.push_back(parse_concat());
    }
    return Regex::intersection_of(std::move(parts));
  }

  Regex parse_concat() {
    if (!starts_atom()) error("expected an expression");
    std::vector<Regex> parts;
    while (starts_atom()) parts.push_back(parse_postfix());
    return Regex::concat_of(std::move(parts));
  }

  Regex parse_postfix() {
    Regex r = parse_prefix();
    while (peek('*')) {
      ++pos_;
      r = Regex::star(r);
    }
    return r;
  }

  Regex parse_prefix() {
    if (peek('!')) {
      ++pos_;
      return Regex::complement(parse_prefix());
    }
    return parse_atom();
  }

  Regex parse_atom() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Regex r = parse_union();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return r;
    }
    ++pos_;
    if (c == '#') return Regex::empty();
    if (c == '_') return Regex::epsilon();
    if (is_reserved(c)) {
      --pos_;
      error("unexpected '" + std::string(1, c) + "'");
    }
    if (alphabet_ && !alphabet_->contains(c)) {
      --pos_;
      error(std::string("symbol '") + c + "' not in alphabet {" + alphabet_->symbols() + "}");
    }
    return Regex::symbol(c);
  }

  std::string_view text_;
  const Alphabet* alphabet_;
  std::size_t pos_ = 0;
};

inline void collect_symbols(const Regex& r, std::string& out) {
  if (r.kind() == Regex::Kind::kSymbol) {
    if (out.find(r.sym()) == std::string::npos) out += r.sym();
  }
  for (const auto& c : r.children()) collect_symbols(c, out);
}

}  // namespace detail

// Grammar, loosest to tightest: '|', '&', juxtaposition, postfix '*',
// prefix '!'. '#' is ∅, '_' is λ, any other printable character is a symbol.
inline Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
  return detail::RegexParser(text, &alphabet).parse();
}

// Parses without an alphabet check.
inline Regex parse_regex(std::string_view text) {
  return detail::RegexParser(text, nullptr).parse();
}

inline std::string symbols_of(const Regex& r) {
  std::string out;
  detail::collect_symbols(r, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool nullable(const Regex& r) {
  using K = Regex::Kind;
  switch (r.kind()) {
    case K::kEmpty: return false;
    case K::kEpsilon: return true;
    case K::kSymbol: return false;
    case K::kUnion:
      return std::any_of(r.children().begin(), r.children().end(),
                         [](const Regex& c) { return nullable(c); });
    case K::kIntersection:
    case K::kConcat:
      return std::all_of(r.children().begin(), r.children().end(),
                         [](const Regex& c) { return nullable(c); });
    case K::kStar: return true;
    case K::kComplement: return !nullable(r.children().front());
  }
  return false;
}

// a⁻¹L(r), in normal form.
inline Regex derivative(const Regex& r, Symbol a) {
  using K = Regex::Kind;
  switch (r.kind()) {
    case K::kEmpty:
    case K::kEpsilon:
      return Regex::empty();
    case K::kSymbol:
      return r.sym() == a ? Regex::epsilon() : Regex::empty();
    case K::kUnion:
    case K::kIntersection: {
      std::vector<Regex> parts;
      for (const auto& c : r.children()) parts.push_back(derivative(c, a));
      return r.kind() == K::kUnion ? Regex::union_of(std::move(parts))
                                   : Regex::intersection_of(std::move(parts));
    }
    case K::kConcat: {
      const auto& kids = r.children();
      std::vector<Regex> terms;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        std::vector<Regex> tail{derivative(kids[i], a)};
        tail.insert(tail.end(), kids.begin() + static_cast<std::ptrdiff_t>(i) + 1, kids.end());
        terms.push_back(Regex::concat_of(std::move(tail)));
        if (!nullable(kids[i])) break;
      }
      return Regex::union_of(std::move(terms));
    }
    case K::kStar:
      return Regex::concat_of({derivative(r.children().front(), a), r});
    case K::kComplement:
      return Regex::complement(derivative(r.children().front(), a));
  }
  return Regex::empty();
}

inline Regex derivative(const Regex& r, const Word& w) {
  Regex out = r;
  for (Symbol s : w) out = derivative(out, s);
  return out;
}

// Membership by iterated derivatives, straight on the expression.
inline bool matches(const Regex& r, const Word& w) { return nullable(derivative(r, w)); }

}  // namespace orda
