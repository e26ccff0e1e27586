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

// Acceptance run: one PASS or FAIL line per criterion, exit status 1 if any
// criterion fails. Every criterion is exact; counts are fixed and seeded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace orda {
namespace {

// First failure message, empty when the criterion holds.
using Criterion = std::function<std::string()>;

bool run(int id, const std::string& title, const Criterion& body) {
  auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = body();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (failure.empty() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " ("
       << static_cast<int>(secs * 1000) << " ms)";
  if (!failure.empty()) line << " -- " << failure;
  std::cout << line.str() << std::endl;
  return failure.empty();
}

std::string where(std::size_t i, const OrderedAutomaton& oa) {
  return "instance " + std::to_string(i) + ":\n" + format_automaton(oa);
}

std::string minimization() {
  Rng rng(1001);
  for (std::size_t i = 0; i < 1000; ++i) {
    auto dfa = random_dfa(rng, 6, 3);
    auto m = minimize_ordered(dfa);
    auto via_regex =
        canonical_ordered_automaton(oracle::state_elimination_regex(dfa), dfa.alphabet());
    if (!isomorphic(m, via_regex)) return where(i, dfa) + "differs from the derivative automaton";
    if (!isomorphic(m, brzozowski_minimize(dfa))) return where(i, dfa) + "differs from double reversal";
  }
  return {};
}

std::string preorder_relation() {
  Rng rng(1002);
  for (std::size_t i = 0; i < 500; ++i) {
    auto oa = random_ordered_automaton(rng, 5, 3);
    if (!(preorder(oa) == oracle::preorder_by_words(oa))) return where(i, oa);
  }
  return {};
}

std::string order_soundness() {
  Rng rng(1003);
  for (std::size_t i = 0; i < 500; ++i) {
    auto m = minimize_ordered(random_ordered_automaton(rng, 6, 3));
    for (State p = 0; p < m.size(); ++p)
      for (State q = 0; q < m.size(); ++q)
        if (m.leq(p, q) != state_inclusion(m, p, m, q).included)
          return where(i, m) + "states " + std::to_string(p) + "," + std::to_string(q);
  }
  return {};
}

// The 500 minimal DFAs shared by criteria 4 and 5.
std::vector<OrderedAutomaton> minimal_dfas() {
  Rng rng(1004);
  std::vector<OrderedAutomaton> out;
  for (std::size_t i = 0; i < 500; ++i) out.push_back(minimize_ordered(random_dfa(rng, 5, 3)));
  return out;
}

std::string monoid_agreement() {
  auto dfas = minimal_dfas();
  for (std::size_t i = 0; i < dfas.size(); ++i) {
    const auto& m = dfas[i];
    const auto& sa = m.semiautomaton();
    auto tm = TransitionMonoid::build(discrete(sa));
    auto ordered = TransitionMonoid::build(m.osa());
    if (is_counter_free(sa).holds != is_aperiodic(tm).holds) return where(i, m) + "counter-free";
    if (is_acyclic(sa).holds != is_r_trivial(tm).holds) return where(i, m) + "acyclic";
    if (is_pt_semiautomaton(sa).holds != is_j_trivial(tm).holds)
      return where(i, m) + "acyclic and confluent";
    if (has_extensive_actions(m.osa()).holds != satisfies_one_leq_x(ordered).holds)
      return where(i, m) + "extensive";
  }
  return {};
}

std::string omega_catalog() {
  auto aperiodic = parse_query("x^w x == x^w");
  auto r_trivial = parse_query("(x y)^w x == (x y)^w");
  auto j_left = parse_query("y (x y)^w == (x y)^w");
  auto dfas = minimal_dfas();
  for (std::size_t i = 0; i < dfas.size(); ++i) {
    const auto& sa = dfas[i].semiautomaton();
    auto osa = discrete(sa);
    auto tm = TransitionMonoid::build(osa);
    bool r = check(osa, r_trivial).holds;
    if (check(osa, aperiodic).holds != is_aperiodic(tm).holds) return where(i, dfas[i]) + "x^w x";
    if (r != is_r_trivial(tm).holds) return where(i, dfas[i]) + "(xy)^w x";
    if ((r && check(osa, j_left).holds) != is_j_trivial(tm).holds)
      return where(i, dfas[i]) + "both J identities";
  }
  return {};
}

std::string insertion_closure() {
  Rng rng(1006);
  for (std::size_t i = 0; i < 200; ++i) {
    auto m = minimize_ordered(random_dfa(rng, 5, 2));
    for (std::size_t n = 1; n <= 3; ++n)
      if (has_n_extensive_actions(m.osa(), n).holds !=
          oracle::residuals_grow_under_insertions(m, n))
        return where(i, m) + "n=" + std::to_string(n);
  }
  return {};
}

std::string finite_and_prefix_testable() {
  Rng rng(1007);
  const Alphabet ab("ab");
  for (std::size_t i = 0; i < 100; ++i) {
    auto words = random_finite_language(rng, ab, 20, 5);
    auto r = finite_language_regex(words);
    auto report = classify_language(canonical_ordered_automaton(r, ab));
    if (!report.holds("finite")) return "finite language " + std::to_string(i);
    const auto& can = report.canonical;
    for (State q = 0; q < can.size(); ++q) {
      auto f = main_follower(can.semiautomaton(), q);
      if (!f || !can.leq(*f, q)) return "main follower order condition, language " + std::to_string(i);
    }
    auto co = classify_language(canonical_ordered_automaton(Regex::complement(r), ab));
    if (!co.holds("cofinite")) return "cofinite language " + std::to_string(i);
  }
  for (std::size_t i = 0; i < 100; ++i) {
    auto r = random_prefix_testable_regex(rng, ab, 20, 5);
    if (!classify_language(canonical_ordered_automaton(r, ab)).holds("prefix_testable"))
      return "prefix-testable language " + std::to_string(i);
  }
  return {};
}

std::string synchronization() {
  for (std::size_t n : {3, 4, 5}) {
    auto sa = fixtures::cerny(n);
    auto v = is_synchronizing(sa);
    if (!v.holds) return "Cerny " + std::to_string(n) + " not synchronizing";
    State target = sa.step(0, v.words[0]);
    for (State q = 0; q < n; ++q)
      if (sa.step(q, v.words[0]) != target) return "reset word does not reset, n=" + std::to_string(n);
  }
  if (is_synchronizing(fixtures::even_a().semiautomaton()).holds) return "(aa)* synchronizing";
  Rng rng(1008);
  for (std::size_t i = 0; i < 200; ++i) {
    auto sa = random_semiautomaton(rng, uniform(rng, 1, 5), first_letters(uniform(rng, 1, 2)));
    if (is_weakly_confluent(sa).holds != oracle::weakly_confluent_by_words(sa))
      return "weak confluence, instance " + std::to_string(i);
  }
  return {};
}

// Every partial order on n states, as relations.
std::vector<StateOrder> partial_orders(std::size_t n) {
  std::vector<std::pair<State, State>> off;
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      if (p != q) off.emplace_back(p, q);
  std::vector<StateOrder> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << off.size()); ++bits) {
    StateOrder le = Relation::identity(n);
    for (std::size_t j = 0; j < off.size(); ++j)
      if (bits >> j & 1) le.set(off[j].first, off[j].second);
    bool ok = true;
    for (State p = 0; p < n && ok; ++p)
      for (State q = 0; q < n && ok; ++q) {
        if (p != q && le(p, q) && le(q, p)) ok = false;
        for (State r = 0; r < n && ok; ++r)
          if (le(p, q) && le(q, r) && !le(p, r)) ok = false;
      }
    if (ok) out.push_back(std::move(le));
  }
  return out;
}

bool compatible(const Semiautomaton& sa, const StateOrder& le) {
  for (State p = 0; p < sa.size(); ++p)
    for (State q = 0; q < sa.size(); ++q)
      if (le(p, q))
        for (std::size_t a = 0; a < sa.letters(); ++a)
          if (!le(sa.next(p, a), sa.next(q, a))) return false;
  return true;
}

// Ordered semiautomata over {a,b} with at most 4 states generated by state 0.
// Every 1-generated instance is isomorphic to one of these.
std::size_t for_each_one_generated(const std::function<std::string(const OrderedSemiautomaton&)>& visit,
                                   std::string& failure) {
  std::size_t seen = 0;
  const Alphabet ab("ab");
  for (std::size_t n = 1; n <= 4; ++n) {
    auto orders = partial_orders(n);
    std::vector<State> delta(2 * n, 0);
    while (true) {
      Semiautomaton sa(n, ab, delta);
      if (reachable_from(sa, 0).size() == n) {
        for (const auto& le : orders) {
          if (!compatible(sa, le)) continue;
          ++seen;
          failure = visit(OrderedSemiautomaton(sa, le));
          if (!failure.empty()) return seen;
        }
      }
      std::size_t j = 0;
      while (j < delta.size() && ++delta[j] == n) delta[j++] = 0;
      if (j == delta.size()) break;
    }
  }
  return seen;
}

std::string constructions() {
  Rng rng(1009);
  for (std::size_t i = 0; i < 100; ++i) {
    const Alphabet alphabet = first_letters(uniform(rng, 1, 2));
    std::vector<OrderedSemiautomaton> family;
    for (std::size_t j = uniform(rng, 1, 3); j > 0; --j) {
      auto sa = random_semiautomaton(rng, uniform(rng, 1, 3), alphabet);
      family.push_back(OrderedSemiautomaton(sa, random_compatible_order(rng, sa)));
    }
    auto e = union_via_product_embedding(family);
    if (!check_homomorphism(e.hom).holds || !is_surjective(e.hom))
      return "union embedding, family " + std::to_string(i);
  }

  for (std::size_t i = 0; i < 100; ++i) {
    auto x = random_ordered_automaton(rng, 4, 2);
    auto y = random_ordered_automaton(rng, 4, 2);
    while (!(y.alphabet() == x.alphabet())) y = random_ordered_automaton(rng, 4, 2);
    auto p = product({x.osa(), y.osa()});
    std::vector<bool> either(p.osa.size()), both(p.osa.size());
    for (State s = 0; s < p.osa.size(); ++s) {
      auto t = p.decode(s);
      either[s] = x.is_final(t[0]) || y.is_final(t[1]);
      both[s] = x.is_final(t[0]) && y.is_final(t[1]);
    }
    std::vector<State> start{x.initial(), y.initial()};
    OrderedAutomaton uni(p.osa, p.encode(start), either), inter(p.osa, p.encode(start), both);
    for (const auto& w : all_words(x.alphabet(), 6)) {
      if (accepts(uni, w) != (accepts(x, w) || accepts(y, w))) return "union recipe on " + w;
      if (accepts(inter, w) != (accepts(x, w) && accepts(y, w))) return "intersection recipe on " + w;
    }

    std::vector<Word> images;
    for (std::size_t b = 0; b < 2; ++b) {
      Word w;
      for (std::size_t len = uniform(rng, 0, 3); len > 0; --len) w += x.alphabet().symbol(uniform(rng, 0, x.letters() - 1));
      images.push_back(w);
    }
    LetterSubstitution f(Alphabet("cd"), x.alphabet(), images);
    auto renamed = f_rename(x, f);
    for (const auto& u : all_words(f.source(), 6))
      if (accepts(renamed, u) != accepts(x, f.apply(u))) return "f-renaming on " + u;
  }

  std::string failure;
  std::size_t count = for_each_one_generated(
      [](const OrderedSemiautomaton& osa) -> std::string {
        auto e = embed_into_recognized_product(osa, 0);
        if (!check_homomorphism(e.hom).holds || !is_surjective(e.hom) ||
            !is_backward_order_preserving(e.hom))
          return "product embedding:\n" + format_automaton(OrderedAutomaton(osa, 0, std::vector<bool>(osa.size())));
        auto c = cover_by_generated(osa);
        if (!check_homomorphism(c.hom).holds || !is_surjective(c.hom))
          return "generated cover:\n" + format_automaton(OrderedAutomaton(osa, 0, std::vector<bool>(osa.size())));
        return {};
      },
      failure);
  if (!failure.empty()) return failure;
  if (count == 0) return "no 1-generated instances enumerated";
  return {};
}

std::string length_multiplying() {
  Rng rng(1010);
  std::size_t queries = 0, attempts = 0;
  static const char* kVars[] = {"x", "y", "z"};
  std::function<OmegaTerm(std::size_t)> term = [&](std::size_t depth) -> OmegaTerm {
    if (depth == 0 || coin(rng, 0.35)) {
      if (coin(rng, 0.1)) return OmegaTerm::unit();
      return OmegaTerm::variable(kVars[uniform(rng, 0, 2)]);
    }
    if (coin(rng)) return OmegaTerm::omega(term(depth - 1));
    return OmegaTerm::concat({term(depth - 1), term(depth - 1)});
  };
  while (queries < 200) {
    if (++attempts > 100000) return "could not draw enough monoids with at most 3 elements";
    auto sa = random_semiautomaton(rng, uniform(rng, 1, 3), first_letters(uniform(rng, 1, 2)));
    auto oa = OrderedAutomaton(OrderedSemiautomaton(sa, random_compatible_order(rng, sa)), 0,
                               std::vector<bool>(sa.size()));
    auto tm = TransitionMonoid::build(oa.osa());
    if (tm.size() > 3) continue;
    ++queries;
    OmegaQuery q{term(3), term(3), coin(rng) ? Comparison::kLeq : Comparison::kEq,
                 Category::kLengthMultiplying};
    auto vars = q.variables();

    bool expected = true;
    std::vector<Element> values(vars.size(), 0);
    while (true) {
      if (oracle::common_length_by_words(tm, values, 64)) {
        Substitution s{vars, values, std::vector<Word>(vars.size())};
        Element l = eval_term(tm, q.left, s), r = eval_term(tm, q.right, s);
        bool ok = q.relation == Comparison::kLeq ? tm.leq(l, r) : l == r;
        expected = expected && ok;
      }
      std::size_t j = vars.size();
      while (j > 0 && ++values[j - 1] == tm.size()) values[--j] = 0;
      if (j == 0) break;
    }
    if (check(oa.osa(), q).holds != expected)
      return q.to_string() + " on\n" + format_automaton(oa);
  }
  return {};
}

}  // namespace
}  // namespace orda

int main() {
  using namespace orda;
  bool ok = true;
  ok &= run(1, "minimization agrees with derivatives and double reversal (1000 DFAs)", minimization);
  ok &= run(2, "state preorder equals the word relation (500 automata)", preorder_relation);
  ok &= run(3, "minimal order is residual inclusion (500 instances)", order_soundness);
  ok &= run(4, "classifiers agree with monoid properties (500 minimal DFAs)", monoid_agreement);
  ok &= run(5, "omega identities agree with monoid properties (500 minimal DFAs)", omega_catalog);
  ok &= run(6, "n-extensive actions iff residuals grow under insertions (200 languages)",
            insertion_closure);
  ok &= run(7, "finite, cofinite and prefix-testable languages are recognized", finite_and_prefix_testable);
  ok &= run(8, "synchronization and weak confluence", synchronization);
  ok &= run(9, "product, renaming and embedding constructions", constructions);
  ok &= run(10, "length-multiplying check agrees with common-length search (200 queries)",
            length_multiplying);
  return ok ? 0 : 1;
}
