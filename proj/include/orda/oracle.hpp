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

// Differential driver: each random instance is run through pairs of
// independent procedures that must agree.

#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "orda/classify.hpp"
#include "orda/languages.hpp"
#include "orda/minimize.hpp"
#include "orda/monoid.hpp"
#include "orda/omega.hpp"
#include "orda/random.hpp"

namespace orda {

struct OracleOptions {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::size_t max_states = 4;
  std::size_t max_letters = 2;
  // Replaces is_counter_free when set; lets tests corrupt a classifier and
  // confirm the driver notices.
  std::function<Verdict(const Semiautomaton&)> counter_free_override;
};

struct OracleSummary {
  std::size_t instances = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }

  std::string to_string() const {
    std::ostringstream out;
    for (const auto& m : mismatches) out << "mismatch: " << m << '\n';
    out << "instances=" << instances << " comparisons=" << comparisons
        << " mismatches=" << mismatches.size() << '\n';
    return out.str();
  }
};

inline OracleSummary run_oracle(const OracleOptions& opts) {
  OracleSummary summary;
  Rng rng(opts.seed);
  for (std::size_t i = 0; i < opts.count; ++i) {
    auto dfa = random_dfa(rng, opts.max_states, opts.max_letters);
    auto canonical = minimize_ordered(dfa);
    const auto& sa = canonical.semiautomaton();
    auto tm = TransitionMonoid::build(discrete(sa));
    auto ordered_tm = TransitionMonoid::build(canonical.osa());
    ++summary.instances;

    auto compare = [&](const std::string& what, bool lhs, bool rhs) {
      ++summary.comparisons;
      if (lhs != rhs) {
        summary.mismatches.push_back("instance " + std::to_string(i) + " " + what + ": " +
                                     (lhs ? "true" : "false") + " vs " + (rhs ? "true" : "false"));
      }
    };

    compare("minimize vs double reversal", true,
            isomorphic(canonical, brzozowski_minimize(dfa)));
    Verdict counter_free =
        opts.counter_free_override ? opts.counter_free_override(sa) : is_counter_free(sa);
    compare("counter-free vs aperiodic", counter_free.holds, is_aperiodic(tm).holds);
    compare("acyclic vs R-trivial", is_acyclic(sa).holds, is_r_trivial(tm).holds);
    compare("acyclic+confluent vs J-trivial", is_pt_semiautomaton(sa).holds,
            is_j_trivial(tm).holds);
    compare("extensive vs 1<=x", has_extensive_actions(canonical.osa()).holds,
            satisfies_one_leq_x(ordered_tm).holds);
    auto catalog = check_identity_catalog(sa);
    compare("aperiodicity identity", catalog.aperiodic.holds, is_aperiodic(tm).holds);
    compare("R identity", catalog.r_trivial.holds, is_r_trivial(tm).holds);
    compare("J identities", catalog.j_trivial.holds, is_j_trivial(tm).holds);
    compare("check 1<=x vs extensive", check(canonical.osa(), parse_query("1 <= x @all")).holds,
            has_extensive_actions(canonical.osa()).holds);
  }
  return summary;
}

}  // namespace orda
