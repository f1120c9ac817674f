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

#include <memory>
#include <string>

#include "eflab/graph.hpp"

namespace eflab {

enum class Logic { FO, MSO };
enum class Vocabulary { Graph, RootedTree };

std::string to_string(Logic logic);
std::string to_string(Vocabulary vocab);
Logic parse_logic(const std::string& text);
Vocabulary parse_vocabulary(const std::string& text);

// A term is an element variable or the root constant R (tree vocabulary).
struct Term {
  enum class Kind { Variable, Root };
  Kind kind = Kind::Variable;
  std::string name;  // empty for Root

  static Term variable(std::string n) { return Term{Kind::Variable, std::move(n)}; }
  static Term root() { return Term{Kind::Root, {}}; }
  bool operator==(const Term&) const = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable AST. Implication and biconditional are kept as nodes (not
// desugared) so printing round-trips. Set variables are capitalized by the
// DSL convention; the AST stores names verbatim.
class Formula {
 public:
  enum class Kind {
    Adjacent,       // lhs ~ rhs            (graph vocabulary)
    Equal,          // lhs = rhs
    ParentChild,    // P(lhs, rhs)          (tree vocabulary; lhs is the parent)
    Membership,     // set_name(lhs)
    Not,            // !child
    And,            // child & child2
    Or,             // child | child2
    Implies,        // child -> child2
    Iff,            // child <-> child2
    ExistsElement,  // exists var_name. child
    ForallElement,  // forall var_name. child
    ExistsSet,      // exists set_name. child
    ForallSet,      // forall set_name. child
  };

  Kind kind;
  Term lhs, rhs;          // atoms
  std::string set_name;   // Membership and set quantifiers
  std::string var_name;   // element quantifiers
  FormulaPtr child, child2;

  static FormulaPtr adjacent(Term a, Term b);
  static FormulaPtr equal(Term a, Term b);
  static FormulaPtr parent_child(Term parent, Term kid);
  static FormulaPtr membership(std::string set, Term t);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implication(FormulaPtr a, FormulaPtr b);
  static FormulaPtr biconditional(FormulaPtr a, FormulaPtr b);
  static FormulaPtr exists(std::string var, FormulaPtr f);
  static FormulaPtr forall(std::string var, FormulaPtr f);
  static FormulaPtr exists_set(std::string var, FormulaPtr f);
  static FormulaPtr forall_set(std::string var, FormulaPtr f);
};

// Longest chain of nested quantifiers; element and set quantifiers both count.
int quantifier_depth(const Formula& f);

// True when the formula contains a set quantifier or a membership atom.
bool uses_set_features(const Formula& f);
Logic logic_of(const Formula& f);

bool structurally_equal(const Formula& a, const Formula& b);

// Rejects free variables and atoms foreign to the vocabulary.
void validate_sentence(const Formula& f, Vocabulary vocab);

// Fully parenthesized DSL text; parse(to_string(f)) reproduces f.
std::string to_string(const Formula& f);

// Recursive-descent parser for the DSL (grammar in docs/formula-dsl.md).
// Lowercase identifiers are element variables, capitalized ones are set
// variables; R is the root constant, P the parent-child relation. The
// result is validated as a sentence of the given vocabulary. Errors carry
// the byte offset.
FormulaPtr parse_formula(const std::string& text, Vocabulary vocab);

struct EvalOptions {
  // Set quantifiers enumerate all 2^n subsets; hard guard on n.
  int mso_subset_limit = 16;
};

// Direct recursive semantics. Set quantifiers enumerate subsets in
// increasing popcount-then-value order with early exit.
bool evaluate(const Formula& f, const Graph& g, const EvalOptions& options = {});
bool evaluate(const Formula& f, const RootedTree& t, const EvalOptions& options = {});

}  // namespace eflab
