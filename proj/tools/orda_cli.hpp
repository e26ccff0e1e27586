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

// Command-line front end. Exit status: 0 success or property holds, 1 property
// fails, 2 usage, parse, validation or resource error.

#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orda/orda.hpp"

namespace orda::cli {

inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kError = 2;

struct RunConfig {
  std::string input;
  std::string regex;
  std::string alphabet;
  std::string query;
  std::string category;
  std::string output;
  std::string format = "text";
  std::vector<std::size_t> ns;
  std::size_t cap_monoid = kDefaultMonoidCap;
  std::size_t cap_product = kDefaultProductCap;
  std::size_t cap_states = kDefaultStateCap;
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::size_t max_states = 4;
  std::size_t max_letters = 2;
};

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// The automaton named by --regex or by the input file.
inline OrderedAutomaton load(const RunConfig& cfg) {
  if (!cfg.regex.empty()) {
    if (!cfg.input.empty()) throw Error("give either an input file or --regex, not both");
    Regex r = cfg.alphabet.empty() ? parse_regex(cfg.regex)
                                   : parse_regex(cfg.regex, Alphabet(cfg.alphabet));
    std::string symbols = cfg.alphabet.empty() ? symbols_of(r) : cfg.alphabet;
    if (symbols.empty()) throw AlphabetError("regex mentions no symbol; pass --alphabet");
    return canonical_ordered_automaton(r, Alphabet(symbols), cfg.cap_states);
  }
  if (cfg.input.empty()) throw Error("no input: give a file (or -) or --regex");
  return parse_automaton(read_input(cfg.input));
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw Error("cannot write '" + cfg.output + "'");
  f << text;
}

inline int cmd_minimize(const RunConfig& cfg, std::ostream& out) {
  auto m = minimize_ordered(load(cfg));
  std::ostringstream text;
  text << "# states: " << m.size() << "\n# order pairs: " << m.order().pair_count() - m.size()
       << "\n"
       << format_automaton(m);
  emit(cfg, text.str(), out);
  if (!cfg.output.empty()) {
    out << "states: " << m.size() << "\norder pairs: " << m.order().pair_count() - m.size()
        << "\n";
  }
  return kHolds;
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  ClassifyOptions opts;
  opts.insertion_ns = cfg.ns;
  opts.monoid_cap = cfg.cap_monoid;
  auto report = classify_language(load(cfg), opts);
  if (cfg.format == "kv") {
    out << render_kv(report);
  } else {
    out << render_text(report);
  }
  return kHolds;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.query.empty()) throw Error("check needs --query");
  OmegaQuery q = parse_query(cfg.query);
  if (!cfg.category.empty()) q.category = parse_category(cfg.category);
  CheckOptions opts;
  opts.monoid_cap = cfg.cap_monoid;
  Verdict v = check(load(cfg).osa(), q, opts);
  if (cfg.format == "kv") {
    out << "query=" << q.to_string() << "\nholds=" << (v.holds ? "true" : "false")
        << "\nvacuous=" << (v.vacuous ? "true" : "false") << '\n';
    if (!v.holds) out << "state=" << v.states.front() << '\n';
  } else {
    out << q.to_string() << ": ";
    if (v.holds) {
      out << (v.vacuous ? "holds (vacuously)" : "holds") << '\n';
    } else {
      out << "fails\nwitness: " << v.detail << '\n';
    }
  }
  return v.holds ? kHolds : kFails;
}

inline int cmd_convert(const RunConfig& cfg, std::ostream& out) {
  auto oa = load(cfg);
  if (cfg.format == "dot") {
    emit(cfg, format_dot(oa), out);
  } else {
    emit(cfg, format_automaton(oa), out);
  }
  return kHolds;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  OracleOptions opts;
  opts.seed = cfg.seed;
  opts.count = cfg.count;
  opts.max_states = cfg.max_states;
  opts.max_letters = cfg.max_letters;
  auto summary = run_oracle(opts);
  out << summary.to_string();
  return summary.ok() ? kHolds : kFails;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"orda: minimal ordered automata, language classes and omega-inequalities"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto input_options = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "automaton file, or - for stdin");
    sub->add_option("--regex", cfg.regex, "language given as a regular expression");
    sub->add_option("--alphabet", cfg.alphabet, "alphabet for --regex (default: its symbols)");
    sub->add_option("--cap-states", cfg.cap_states, "derivative automaton state cap")
        ->check(CLI::PositiveNumber);
  };

  auto* minimize = app.add_subcommand("minimize", "write the minimal ordered automaton");
  input_options(minimize);
  minimize->add_option("-o,--output", cfg.output, "output file");

  auto* classify = app.add_subcommand("classify", "report the language classes");
  input_options(classify);
  classify->add_option("--n", cfg.ns, "n values for n-insertion closure")->delimiter(',');
  classify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "kv"}));
  classify->add_option("--cap-monoid", cfg.cap_monoid)->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "decide an omega-inequality");
  input_options(check_cmd);
  check_cmd->add_option("-q,--query", cfg.query, "e.g. \"x^w x == x^w @all\"")->required();
  check_cmd->add_option("--category", cfg.category, "override: all|ne|lp|surj|lm")
      ->check(CLI::IsMember({"all", "ne", "lp", "surj", "lm"}));
  check_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "kv"}));
  check_cmd->add_option("--cap-monoid", cfg.cap_monoid)->check(CLI::PositiveNumber);
  check_cmd->add_option("--cap-product", cfg.cap_product)->check(CLI::PositiveNumber);

  auto* convert = app.add_subcommand("convert", "re-emit as text or DOT");
  input_options(convert);
  convert->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "dot"}));
  convert->add_option("-o,--output", cfg.output, "output file");

  auto* oracle = app.add_subcommand("oracle", "differential self-test on random instances");
  oracle->add_option("--seed", cfg.seed);
  oracle->add_option("--count", cfg.count);
  oracle->add_option("--max-states", cfg.max_states)->check(CLI::PositiveNumber);
  oracle->add_option("--max-letters", cfg.max_letters)->check(CLI::Range(1, 26));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*minimize) return cmd_minimize(cfg, out);
    if (*classify) return cmd_classify(cfg, out);
    if (*check_cmd) return cmd_check(cfg, out);
    if (*convert) return cmd_convert(cfg, out);
    if (*oracle) return cmd_oracle(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace orda::cli
