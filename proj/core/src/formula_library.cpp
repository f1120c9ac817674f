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

#include "eflab/formula_library.hpp"

#include <stdexcept>

namespace eflab {

namespace {

struct RawEntry {
  const char* name;
  const char* text;
  int depth;
  Vocabulary vocab;
};

// Depths are declared here and asserted against quantifier_depth in tests.
const RawEntry kEntries[] = {
    // Graph vocabulary, FO.
    {"nonempty", "exists x. x = x", 1, Vocabulary::Graph},
    {"has_edge", "exists x. exists y. x ~ y", 2, Vocabulary::Graph},
    {"two_distinct", "exists x. exists y. !(x = y)", 2, Vocabulary::Graph},
    {"no_isolated_vertex", "forall x. exists y. x ~ y", 2, Vocabulary::Graph},
    {"dominating_vertex", "exists x. forall y. x = y | x ~ y", 2, Vocabulary::Graph},
    {"isolated_vertex", "exists x. forall y. !(x ~ y)", 2, Vocabulary::Graph},
    {"three_distinct",
     "exists x. exists y. exists z. !(x = y) & !(x = z) & !(y = z)", 3, Vocabulary::Graph},
    {"contains_path3",
     "exists x. exists y. exists z. x ~ y & y ~ z & !(x = z)", 3, Vocabulary::Graph},
    {"contains_triangle",
     "exists x. exists y. exists z. x ~ y & y ~ z & x ~ z", 3, Vocabulary::Graph},
    {"diameter_at_most_2",
     "forall x. forall y. x = y | x ~ y | exists z. x ~ z & z ~ y", 3, Vocabulary::Graph},
    {"min_degree_2",
     "forall x. exists y. exists z. x ~ y & x ~ z & !(y = z)", 3, Vocabulary::Graph},
    // Graph vocabulary, MSO. "connectivity" is transcribed verbatim from
    // the depth-3 example sentence.
    {"connectivity",
     "forall X. (exists x1. exists x2. X(x1) & !X(x2)) -> "
     "(exists y. exists z. X(y) & !X(z) & y ~ z)",
     3, Vocabulary::Graph},
    {"some_set_inhabited", "exists X. exists x. X(x)", 2, Vocabulary::Graph},
    {"full_set_exists", "exists X. forall y. X(y)", 2, Vocabulary::Graph},
    // Rooted-tree vocabulary, FO.
    {"root_has_child", "exists x. P(R, x)", 1, Vocabulary::RootedTree},
    {"single_vertex", "forall x. x = R", 1, Vocabulary::RootedTree},
    {"depth_at_most_1", "forall x. x = R | P(R, x)", 1, Vocabulary::RootedTree},
    {"depth_at_least_2",
     "exists x. exists y. P(x, y) & !(x = R)", 2, Vocabulary::RootedTree},
    {"root_degree_2",
     "exists x. exists y. P(R, x) & P(R, y) & !(x = y)", 2, Vocabulary::RootedTree},
    {"leaf_exists", "exists x. forall y. !P(x, y)", 2, Vocabulary::RootedTree},
    {"chain_of_two",
     "exists x. exists y. exists z. P(x, y) & P(y, z)", 3, Vocabulary::RootedTree},
    {"branching_vertex",
     "exists x. exists y. exists z. P(x, y) & P(x, z) & !(y = z)", 3, Vocabulary::RootedTree},
    // Rooted-tree vocabulary, MSO: downward-closed set containing the root
    // covers everything (the tree analog of the connectivity sentence).
    {"downward_closure",
     "forall X. X(R) & (forall x. forall y. X(x) & P(x, y) -> X(y)) -> forall z. X(z)",
     3, Vocabulary::RootedTree},
    {"root_set_exists", "exists X. X(R)", 1, Vocabulary::RootedTree},
};

}  // namespace

std::vector<LibraryEntry> formula_library(int k, Vocabulary vocab, Logic logic) {
  if (k < 0 || k > 3) {
    throw std::invalid_argument("formula_library: curated corpus covers 0 <= k <= 3");
  }
  std::vector<LibraryEntry> out;
  for (const RawEntry& raw : kEntries) {
    if (raw.vocab != vocab || raw.depth > k) continue;
    FormulaPtr f = parse_formula(raw.text, raw.vocab);
    const Logic formula_logic = logic_of(*f);
    if (logic == Logic::FO && formula_logic == Logic::MSO) continue;
    out.push_back(LibraryEntry{raw.name, raw.text, raw.depth, formula_logic, raw.vocab,
                               std::move(f)});
  }
  return out;
}

}  // namespace eflab
