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

// Membership straight from the regex semantics, without derivatives.
bool in_language(const Regex& r, const Word& w) {
  using K = Regex::Kind;
  switch (r.kind()) {
    case K::kEmpty:
      return false;
    case K::kEpsilon:
      return w.empty();
    case K::kSymbol:
      return w.size() == 1 && w[0] == r.sym();
    case K::kUnion:
      for (const auto& c : r.children())
        if (in_language(c, w)) return true;
      return false;
    case K::kIntersection:
      for (const auto& c : r.children())
        if (!in_language(c, w)) return false;
      return true;
    case K::kComplement:
      return !in_language(r.children().front(), w);
    case K::kConcat: {
      const auto& kids = r.children();
      Regex rest = Regex::concat_of({kids.begin() + 1, kids.end()});
      for (std::size_t i = 0; i <= w.size(); ++i)
        if (in_language(kids.front(), w.substr(0, i)) && in_language(rest, w.substr(i))) return true;
      return false;
    }
    case K::kStar: {
      if (w.empty()) return true;
      for (std::size_t i = 1; i <= w.size(); ++i)
        if (in_language(r.children().front(), w.substr(0, i)) && in_language(r, w.substr(i)))
          return true;
      return false;
    }
  }
  return false;
}

TEST(RegexTest, ParsesAndPrintsWithPrecedence) {
  EXPECT_EQ(parse_regex("a|b&c").to_string(), "a|b&c");
  EXPECT_EQ(parse_regex("(a|b)*c").to_string(), "(a|b)*c");
  EXPECT_EQ(parse_regex("a _ b").to_string(), "ab");
  EXPECT_EQ(parse_regex("a**").to_string(), "a*");
  EXPECT_EQ(parse_regex("a|a").to_string(), "a");
  EXPECT_EQ(parse_regex("a&!#").to_string(), "a");
}

TEST(RegexTest, RoundTripsRandomExpressions) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    auto r = random_regex(rng, first_letters(2), 4);
    EXPECT_EQ(parse_regex(r.to_string()), r) << r.to_string();
  }
}

TEST(RegexTest, SyntaxErrorsReportColumns) {
  auto error_of = [](const char* text) {
    try {
      parse_regex(text, Alphabet("ab"));
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(error_of("a|"), "regex column 3: expected an expression");
  EXPECT_EQ(error_of("(a"), "regex column 3: expected ')'");
  EXPECT_EQ(error_of("ac"), "regex column 2: symbol 'c' not in alphabet {ab}");
}

TEST(RegexTest, DerivativesFollowTheDefinition) {
  EXPECT_EQ(derivative(parse_regex("(ab)*"), 'a').to_string(), "b(ab)*");
  EXPECT_EQ(derivative(parse_regex("!#a!#"), 'a').to_string(), "!#");
  EXPECT_EQ(derivative(parse_regex("_"), 'a').to_string(), "#");
  EXPECT_TRUE(nullable(parse_regex("!a")));
  EXPECT_FALSE(nullable(parse_regex("!#a!#")));
}

TEST(RegexTest, MatchingAgreesWithSemantics) {
  Rng rng(23);
  const Alphabet ab("ab");
  auto words = all_words(ab, 5);
  for (int i = 0; i < 150; ++i) {
    auto r = random_regex(rng, ab, 3);
    auto oa = derivative_automaton(r, ab);
    for (const auto& w : words) {
      bool expected = in_language(r, w);
      ASSERT_EQ(matches(r, w), expected) << r.to_string() << " on " << w;
      ASSERT_EQ(accepts(oa, w), expected) << r.to_string() << " on " << w;
    }
  }
}

TEST(DerivativeAutomatonTest, FixtureSizes) {
  const Alphabet ab("ab");
  EXPECT_EQ(derivative_automaton(parse_regex("!#a!#"), ab).size(), 2u);
  EXPECT_EQ(derivative_automaton(parse_regex("(ab)*"), ab).size(), 3u);
  EXPECT_EQ(derivative_automaton(parse_regex("ab|ba"), ab).size(), 5u);
  EXPECT_EQ(derivative_automaton(parse_regex("(a|b)*a(a|b)(a|b)"), ab).size(), 8u);
  EXPECT_THROW(derivative_automaton(parse_regex("(a|b)*a(a|b)(a|b)"), ab, 4), ResourceError);
  EXPECT_THROW(derivative_automaton(parse_regex("c"), ab), AlphabetError);
}

TEST(CanonicalTest, FixturesHaveTheExpectedShape) {
  auto contains = fixtures::contains_a();
  EXPECT_EQ(contains.size(), 2u);
  EXPECT_TRUE(contains.leq(0, 1));
  EXPECT_TRUE(contains.is_final(1));
  EXPECT_EQ(fixtures::abstar().size(), 3u);
  EXPECT_EQ(fixtures::abstar().order().pair_count(), 5u);
  auto even = fixtures::even_a();
  EXPECT_EQ(even.size(), 2u);
  EXPECT_EQ(even.next(0, 0), 1u);
  EXPECT_EQ(even.next(1, 0), 0u);
  EXPECT_EQ(fixtures::fin().size(), 5u);
}

TEST(NfaTest, SubsetConstructionOrdersByInclusion) {
  // Words ending in a.
  Nfa nfa(2, Alphabet("ab"));
  nfa.add_transition(0, 'a', 0);
  nfa.add_transition(0, 'b', 0);
  nfa.add_transition(0, 'a', 1);
  nfa.set_initial(0);
  nfa.set_final(1);
  auto d = subset_construction(nfa);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.leq(0, 1));
  EXPECT_TRUE(validate(d).empty());
  for (const auto& w : all_words(Alphabet("ab"), 5)) {
    EXPECT_EQ(accepts(d, w), nfa.accepts(w));
    EXPECT_EQ(accepts(d, w), !w.empty() && w.back() == 'a');
  }
}

TEST(NfaTest, ReverseRecognizesMirrorImage) {
  auto fin = fixtures::fin();
  auto rev = reverse(fin);
  auto twice = reverse(rev);
  for (const auto& w : all_words(fin.alphabet(), 5)) {
    Word m(w.rbegin(), w.rend());
    EXPECT_EQ(rev.accepts(w), accepts(fin, m));
    EXPECT_EQ(twice.accepts(w), accepts(fin, w));
  }
}

TEST(BrzozowskiTest, MatchesMinimizationOnFixtures) {
  for (const auto& oa : {fixtures::contains_a(), fixtures::abstar(), fixtures::even_a(),
                         fixtures::fin()}) {
    auto b = brzozowski_minimize(oa);
    EXPECT_TRUE(isomorphic(minimize_ordered(b), b));
    EXPECT_TRUE(isomorphic(oa, b));
  }
}

TEST(InclusionTest, ShortestLeastCounterexample) {
  auto r = language_inclusion(fixtures::contains_a(), fixtures::abstar());
  EXPECT_FALSE(r.included);
  EXPECT_EQ(*r.counterexample, "a");
  auto s = language_inclusion(fixtures::abstar(), fixtures::contains_a());
  EXPECT_FALSE(s.included);
  EXPECT_EQ(*s.counterexample, "");
  EXPECT_TRUE(language_inclusion(fixtures::fin(), fixtures::contains_a()).included);
  EXPECT_TRUE(language_equivalent(fixtures::fin(),
                                  derivative_automaton(parse_regex("ba|ab"), Alphabet("ab"))));
}

TEST(InclusionTest, AgreesWithWordOracle) {
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    auto a = derivative_automaton(random_regex(rng, Alphabet("ab"), 3), Alphabet("ab"));
    auto b = derivative_automaton(random_regex(rng, Alphabet("ab"), 3), Alphabet("ab"));
    auto r = language_inclusion(a, b);
    const std::size_t bound = r.included ? 8 : r.counterexample->size();
    std::optional<Word> first;
    for (const auto& w : all_words(Alphabet("ab"), bound))
      if (accepts(a, w) && !accepts(b, w)) {
        first = w;
        break;
      }
    EXPECT_EQ(r.included, !first.has_value());
    if (first) {
      EXPECT_EQ(*r.counterexample, *first);
    }
  }
}

TEST(EnumerateTest, LengthLexOrder) {
  EXPECT_EQ(enumerate_words(fixtures::abstar(), 4), (std::vector<Word>{"", "ab", "abab"}));
  EXPECT_EQ(enumerate_words(fixtures::fin(), 4), (std::vector<Word>{"ab", "ba"}));
  EXPECT_EQ(enumerate_words(fixtures::contains_a(), 2), (std::vector<Word>{"a", "aa", "ab", "ba"}));
}

}  // namespace
}  // namespace orda
