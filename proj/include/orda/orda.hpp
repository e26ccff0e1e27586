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

#include "orda/classify.hpp"
#include "orda/constructions.hpp"
#include "orda/core.hpp"
#include "orda/languages.hpp"
#include "orda/minimize.hpp"
#include "orda/monoid.hpp"
#include "orda/omega.hpp"
#include "orda/oracle.hpp"
#include "orda/random.hpp"
#include "orda/regex.hpp"
#include "orda/text_format.hpp"
#include "orda/verdict.hpp"
