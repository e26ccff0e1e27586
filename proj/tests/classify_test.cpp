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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace orda {
namespace {

// Counterexamples are replayed against the defining conditions.

void expect_counter_free_witness(const Semiautomaton& sa, const Verdict& v) {
  ASSERT_FALSE(v.holds);
  State q = v.states[0];
  const Word& u = v.words[0];
  State p = q;
  std::size_t n = 0;
  do {
    p = sa.step(p, u);
    ++n;
  } while (p != q && n <= sa.size());
  EXPECT_EQ(p, q) << "q·u^n returns to q";
  EXPECT_NE(sa.step(q, u), q);
}

void expect_cycle_witness(const Semiautomaton& sa, const Verdict& v) {
  ASSERT_FALSE(v.holds);
  State q = v.states[0];
  EXPECT_EQ(sa.step(q, v.words[0]), q);
  EXPECT_NE(v.words[0].find(v.letters[0]), Word::npos);
  EXPECT_NE(sa.step(q, Word(1, v.letters[0])), q);
}

void expect_confluence_witness(const Semiautomaton& sa, const Verdict& v) {
  ASSERT_FALSE(v.holds);
  State q = v.states[0];
  const Word &u = v.words[0], &w = v.words[1];
  std::string letters;
  for (Symbol s : sa.alphabet().symbols())
    if (u.find(s) != Word::npos || w.find(s) != Word::npos) letters += s;
  // No word over c(uv) of length ≤ |Q|² joins q·u and q·w.
  auto sub = Alphabet(letters);
  for (const auto& x : all_words(sub, sa.size() * sa.size() > 8 ? 8 : sa.size() * sa.size()))
    ASSERT_NE(sa.step(q, u + x), sa.step(q, w + x));
}

TEST(CounterFreeTest, Fixtures) {
  EXPECT_TRUE(is_counter_free(fixtures::abstar().semiautomaton()).holds);
  auto even = fixtures::even_a().semiautomaton();
  auto v = is_counter_free(even);
  EXPECT_EQ(v.states, std::vector<State>{0});
  EXPECT_EQ(v.words, std::vector<Word>{"a"});
  expect_counter_free_witness(even, v);
}

TEST(CounterFreeTest, WitnessesReplay) {
  Rng rng(67);
  for (int i = 0; i < 200; ++i) {
    auto sa = random_semiautomaton(rng, uniform(rng, 1, 5), first_letters(2));
    auto v = is_counter_free(sa);
    if (!v) expect_counter_free_witness(sa, v);
  }
}

TEST(AcyclicTest, FixturesAndTopologicalOrder) {
  auto abstar = fixtures::abstar().semiautomaton();
  auto v = is_acyclic(abstar);
  EXPECT_EQ(v.states, std::vector<State>{0});
  EXPECT_EQ(v.words, std::vector<Word>{"ab"});
  EXPECT_EQ(v.letters, std::vector<Symbol>{'a'});
  expect_cycle_witness(abstar, v);

  auto fin = fixtures::fin().semiautomaton();
  auto ok = is_acyclic(fin);
  ASSERT_TRUE(ok.holds);
  std::vector<std::size_t> pos(fin.size());
  for (std::size_t i = 0; i < ok.states.size(); ++i) pos[ok.states[i]] = i;
  for (State q = 0; q < fin.size(); ++q)
    for (std::size_t a = 0; a < fin.letters(); ++a)
      EXPECT_LE(pos[q], pos[fin.next(q, a)]);
}

TEST(ConfluenceTest, Fixtures) {
  EXPECT_TRUE(is_confluent(fixtures::contains_a().semiautomaton()).holds);
  EXPECT_TRUE(is_confluent(fixtures::fin().semiautomaton()).holds);
  // a*b*: every branch falls into the sink under "ba".
  auto astar_bstar = canonical_ordered_automaton(parse_regex("a*b*"), Alphabet("ab"));
  EXPECT_TRUE(is_confluent(astar_bstar.semiautomaton()).holds);
  // Two absorbing states reached by different letters.
  Semiautomaton split(3, Alphabet("ab"), {1, 2, 1, 1, 2, 2});
  auto v = is_confluent(split);
  EXPECT_EQ(v.words, (std::vector<Word>{"a", "b"}));
  expect_confluence_witness(split, v);
}

TEST(ConfluenceTest, LetterCap) {
  Semiautomaton big(1, Alphabet("abcdefghijk"), std::vector<State>(11, 0));
  EXPECT_THROW(is_confluent(big), ResourceError);
  EXPECT_TRUE(is_confluent(big, 11).holds);
}

TEST(ConfluenceTest, AgreesWithPowerCriterionOnAcyclicInputs) {
  Rng rng(71);
  int acyclic_seen = 0;
  for (int i = 0; i < 2000 && acyclic_seen < 150; ++i) {
    auto sa = random_semiautomaton(rng, uniform(rng, 1, 5), first_letters(2));
    if (!is_acyclic(sa)) continue;
    ++acyclic_seen;
    auto v = is_confluent(sa);
    EXPECT_EQ(v.holds, confluence_by_powers(sa, 4).holds);
    if (!v) expect_confluence_witness(sa, v);
  }
  EXPECT_GE(acyclic_seen, 100);
  EXPECT_THROW(confluence_by_powers(fixtures::even_a().semiautomaton(), 2), PreconditionError);
}

TEST(ExtensiveTest, Fixtures) {
  EXPECT_TRUE(has_extensive_actions(fixtures::contains_a().osa()).holds);
  auto v = has_extensive_actions(fixtures::fin().osa());
  EXPECT_EQ(v.states, std::vector<State>{0});
  EXPECT_EQ(v.letters, std::vector<Symbol>{'a'});
}

TEST(AutonomousTest, CycleUnions) {
  auto even = fixtures::even_a().semiautomaton();
  EXPECT_TRUE(is_autonomous(even).holds);
  EXPECT_TRUE(is_cycle_union_dividing(even, 2).holds);
  EXPECT_TRUE(is_cycle_union_dividing(even, 4).holds);
  auto odd = is_cycle_union_dividing(even, 3);
  EXPECT_FALSE(odd.holds);
  EXPECT_EQ(odd.parts, (std::vector<std::vector<State>>{{0, 1}}));

  // ρ shape: 0 → 1 → 2 → 1.
  Semiautomaton rho(3, Alphabet("a"), {1, 2, 1});
  auto r = is_cycle_union_dividing(rho, 2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.states, std::vector<State>{0});

  auto t = is_cycle_union_dividing(trivial(3, Alphabet("ab")).semiautomaton(), 1);
  EXPECT_TRUE(t.holds);
  EXPECT_EQ(t.parts.size(), 3u);
  EXPECT_FALSE(is_autonomous(fixtures::abstar().semiautomaton()).holds);
}

TEST(SynchronizingTest, CernyFamily) {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto sa = fixtures::cerny(n);
    auto v = is_synchronizing(sa);
    ASSERT_TRUE(v.holds);
    std::set<State> images;
    for (State q = 0; q < n; ++q) images.insert(sa.step(q, v.words[0]));
    EXPECT_EQ(images.size(), 1u);
  }
  EXPECT_EQ(is_synchronizing(fixtures::cerny(4)).words[0], "baaabaaab");
  auto even = is_synchronizing(fixtures::even_a().semiautomaton());
  EXPECT_FALSE(even.holds);
  EXPECT_EQ(even.states, (std::vector<State>{0, 1}));
}

TEST(WeaklyConfluentTest, ComponentsAndOracle) {
  auto t = is_weakly_confluent(trivial(3, Alphabet("ab")).semiautomaton());
  EXPECT_TRUE(t.holds);
  EXPECT_EQ(t.parts.size(), 3u);
  EXPECT_FALSE(is_weakly_confluent(fixtures::even_a().semiautomaton()).holds);

  Rng rng(73);
  for (int i = 0; i < 200; ++i) {
    auto sa = random_semiautomaton(rng, uniform(rng, 1, 5), first_letters(2));
    EXPECT_EQ(is_weakly_confluent(sa).holds, oracle::weakly_confluent_by_words(sa));
  }
}

TEST(StronglyAcyclicTest, MainFollower) {
  auto fin = fixtures::fin().semiautomaton();
  EXPECT_TRUE(is_strongly_acyclic(fin).holds);
  for (State q = 0; q < fin.size(); ++q) EXPECT_EQ(main_follower(fin, q), std::optional<State>{3});

  auto contains = fixtures::contains_a().semiautomaton();
  auto v = is_strongly_acyclic(contains);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.states, std::vector<State>{0});
  EXPECT_EQ(v.words, std::vector<Word>{"b"});
  EXPECT_EQ(v.letters, std::vector<Symbol>{'a'});
  EXPECT_THROW(main_follower(contains, 0), PreconditionError);
}

TEST(InsertionTest, NExtensiveAgainstResidualOracle) {
  auto even = fixtures::even_a();
  EXPECT_FALSE(has_n_extensive_actions(even.osa(), 1).holds);
  EXPECT_TRUE(has_n_extensive_actions(even.osa(), 2).holds);
  auto fin = has_n_extensive_actions(fixtures::fin().osa(), 2);
  EXPECT_EQ(fin.words, std::vector<Word>{"aa"});

  Rng rng(79);
  for (int i = 0; i < 100; ++i) {
    auto oa = minimize_ordered(random_dfa(rng, 5, 2));
    for (std::size_t n = 1; n <= 3; ++n)
      EXPECT_EQ(has_n_extensive_actions(oa.osa(), n).holds,
                oracle::residuals_grow_under_insertions(oa, n));
  }
}

TEST(ClassifyLanguageTest, FixtureReports) {
  auto fin = classify_language(fixtures::fin());
  EXPECT_TRUE(fin.holds("finite"));
  EXPECT_FALSE(fin.holds("cofinite"));
  EXPECT_TRUE(fin.holds("prefix_testable"));
  EXPECT_TRUE(fin.holds("piecewise_testable"));

  auto even = classify_language(fixtures::even_a());
  EXPECT_FALSE(even.holds("star_free"));
  EXPECT_EQ(format_witness(even.at("star_free")), "(0,\"a\")");
  EXPECT_FALSE(even.holds("synchronizing"));
  EXPECT_TRUE(even.holds("autonomous"));

  auto all = classify_language(canonical_ordered_automaton(parse_regex("!#"), Alphabet("ab")));
  for (const auto& [key, v] : all.entries) {
    if (key == "finite") {
      EXPECT_FALSE(v.holds);
    } else {
      EXPECT_TRUE(v.holds) << key;
    }
  }
  EXPECT_THROW(all.at("nonsense"), std::out_of_range);
}

TEST(ClassifyLanguageTest, JudgesTheMinimalAutomaton) {
  // A redundant automaton for (aa)* with four states.
  Semiautomaton sa(4, Alphabet("a"), {1, 2, 3, 0});
  OrderedAutomaton oa(discrete(sa), 0, {true, false, true, false});
  auto r = classify_language(oa);
  EXPECT_EQ(r.canonical.size(), 2u);
  EXPECT_FALSE(r.holds("star_free"));
}

TEST(ClassifyLanguageTest, KvHasOneLinePerClass) {
  ClassifyOptions opts;
  opts.insertion_ns = {1, 2, 3};
  auto r = classify_language(fixtures::abstar(), opts);
  auto kv = render_kv(r);
  std::istringstream in(kv);
  std::string line;
  std::vector<std::string> keys;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    ASSERT_NE(eq, std::string::npos);
    keys.push_back(line.substr(0, eq));
    auto value = line.substr(eq + 1);
    EXPECT_TRUE(value == "true" || value == "false");
  }
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "finite", "cofinite", "prefix_testable", "piecewise_testable",
                      "positive_piecewise_testable", "star_free", "r_trivial_language",
                      "weakly_confluent", "synchronizing", "autonomous", "n_insertion_closed_1",
                      "n_insertion_closed_2", "n_insertion_closed_3"}));
  EXPECT_NE(render_text(r).find("star_free ✓"), std::string::npos);
}

}  // namespace
}  // namespace orda
