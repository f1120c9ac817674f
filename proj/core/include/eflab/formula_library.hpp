// Copyright 2026 The eflab Authors.
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

#include "eflab/formula.hpp"

namespace eflab {

struct LibraryEntry {
  std::string name;
  std::string text;  // DSL source
  int declared_depth;
  Logic logic;
  Vocabulary vocab;
  FormulaPtr formula;
};

// Curated cross-check corpus: counting sentences, degree sentences,
// connectivity, containment of small patterns, each with its declared
// quantifier depth. Returns the entries of the requested vocabulary with
// depth <= k; logic = FO filters out set-quantifier formulas, logic = MSO
// returns everything (FO is a fragment of MSO).
std::vector<LibraryEntry> formula_library(int k, Vocabulary vocab, Logic logic);

}  // namespace eflab
