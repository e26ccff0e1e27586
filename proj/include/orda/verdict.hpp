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

#include <string>
#include <vector>

#include "orda/core.hpp"

namespace orda {

// Outcome of a decision procedure. On failure the witness fields hold a
// counterexample that can be re-checked against the defining condition; on
// success they may hold a certificate (a topological order, a reset word).
struct Verdict {
  bool holds = true;
  // Universally quantified property over an empty domain.
  bool vacuous = false;
  std::string detail;
  std::vector<State> states;
  std::vector<Word> words;
  std::vector<Symbol> letters;
  std::vector<std::vector<State>> parts;

  explicit operator bool() const { return holds; }

  static Verdict yes(std::string detail = {}) {
    Verdict v;
    v.detail = std::move(detail);
    return v;
  }
  static Verdict no(std::string detail) {
    Verdict v;
    v.holds = false;
    v.detail = std::move(detail);
    return v;
  }
};

}  // namespace orda
