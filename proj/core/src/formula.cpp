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

#include "eflab/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace eflab {

std::string to_string(Logic logic) { return logic == Logic::FO ? "fo" : "mso"; }

std::string to_string(Vocabulary vocab) {
  return vocab == Vocabulary::Graph ? "graph" : "rooted_tree";
}

Logic parse_logic(const std::string& text) {
  if (text == "fo" || text == "FO") return Logic::FO;
  if (text == "mso" || text == "MSO") return Logic::MSO;
  throw std::invalid_argument("unknown logic '" + text + "' (want fo|mso)");
}

Vocabulary parse_vocabulary(const std::string& text) {
  if (text == "graph") return Vocabulary::Graph;
  if (text == "rooted_tree" || text == "tree") return Vocabulary::RootedTree;
  throw std::invalid_argument("unknown vocabulary '" + text + "' (want graph|rooted_tree)");
}

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

Formula atom(Formula::Kind kind, Term a, Term b) {
  Formula f;
  f.kind = kind;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return f;
}

Formula binary(Formula::Kind kind, FormulaPtr a, FormulaPtr b) {
  if (!a || !b) throw std::invalid_argument("formula: null operand");
  Formula f;
  f.kind = kind;
  f.child = std::move(a);
  f.child2 = std::move(b);
  return f;
}

Formula quantifier(Formula::Kind kind, std::string var, FormulaPtr body, bool set_var) {
  if (!body) throw std::invalid_argument("formula: null quantifier body");
  if (var.empty()) throw std::invalid_argument("formula: empty variable name");
  Formula f;
  f.kind = kind;
  if (set_var) {
    f.set_name = std::move(var);
  } else {
    f.var_name = std::move(var);
  }
  f.child = std::move(body);
  return f;
}

}  // namespace

FormulaPtr Formula::adjacent(Term a, Term b) {
  return make(atom(Kind::Adjacent, std::move(a), std::move(b)));
}
FormulaPtr Formula::equal(Term a, Term b) {
  return make(atom(Kind::Equal, std::move(a), std::move(b)));
}
FormulaPtr Formula::parent_child(Term parent, Term kid) {
  return make(atom(Kind::ParentChild, std::move(parent), std::move(kid)));
}
FormulaPtr Formula::membership(std::string set, Term t) {
  Formula f = atom(Kind::Membership, std::move(t), Term{});
  f.set_name = std::move(set);
  return make(std::move(f));
}
FormulaPtr Formula::negation(FormulaPtr f) {
  if (!f) throw std::invalid_argument("formula: null operand");
  Formula out;
  out.kind = Kind::Not;
  out.child = std::move(f);
  return make(std::move(out));
}
FormulaPtr Formula::conjunction(FormulaPtr a, FormulaPtr b) {
  return make(binary(Kind::And, std::move(a), std::move(b)));
}
FormulaPtr Formula::disjunction(FormulaPtr a, FormulaPtr b) {
  return make(binary(Kind::Or, std::move(a), std::move(b)));
}
FormulaPtr Formula::implication(FormulaPtr a, FormulaPtr b) {
  return make(binary(Kind::Implies, std::move(a), std::move(b)));
}
FormulaPtr Formula::biconditional(FormulaPtr a, FormulaPtr b) {
  return make(binary(Kind::Iff, std::move(a), std::move(b)));
}
FormulaPtr Formula::exists(std::string var, FormulaPtr f) {
  return make(quantifier(Kind::ExistsElement, std::move(var), std::move(f), false));
}
FormulaPtr Formula::forall(std::string var, FormulaPtr f) {
  return make(quantifier(Kind::ForallElement, std::move(var), std::move(f), false));
}
FormulaPtr Formula::exists_set(std::string var, FormulaPtr f) {
  return make(quantifier(Kind::ExistsSet, std::move(var), std::move(f), true));
}
FormulaPtr Formula::forall_set(std::string var, FormulaPtr f) {
  return make(quantifier(Kind::ForallSet, std::move(var), std::move(f), true));
}

int quantifier_depth(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Adjacent:
    case Formula::Kind::Equal:
    case Formula::Kind::ParentChild:
    case Formula::Kind::Membership:
      return 0;
    case Formula::Kind::Not:
      return quantifier_depth(*f.child);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return std::max(quantifier_depth(*f.child), quantifier_depth(*f.child2));
    case Formula::Kind::ExistsElement:
    case Formula::Kind::ForallElement:
    case Formula::Kind::ExistsSet:
    case Formula::Kind::ForallSet:
      return 1 + quantifier_depth(*f.child);
  }
  throw std::logic_error("quantifier_depth: bad kind");
}

bool uses_set_features(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Membership:
    case Formula::Kind::ExistsSet:
    case Formula::Kind::ForallSet:
      return true;
    case Formula::Kind::Adjacent:
    case Formula::Kind::Equal:
    case Formula::Kind::ParentChild:
      return false;
    case Formula::Kind::Not:
    case Formula::Kind::ExistsElement:
    case Formula::Kind::ForallElement:
      return uses_set_features(*f.child);
    default:
      return uses_set_features(*f.child) || uses_set_features(*f.child2);
  }
}

Logic logic_of(const Formula& f) {
  return uses_set_features(f) ? Logic::MSO : Logic::FO;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  if (!(a.lhs == b.lhs) || !(a.rhs == b.rhs)) return false;
  if (a.set_name != b.set_name || a.var_name != b.var_name) return false;
  if (static_cast<bool>(a.child) != static_cast<bool>(b.child)) return false;
  if (static_cast<bool>(a.child2) != static_cast<bool>(b.child2)) return false;
  if (a.child && !structurally_equal(*a.child, *b.child)) return false;
  if (a.child2 && !structurally_equal(*a.child2, *b.child2)) return false;
  return true;
}

namespace {

struct ScopeState {
  std::vector<std::string> element_vars;
  std::vector<std::string> set_vars;
  Vocabulary vocab;
};

void check_term(const Term& t, const ScopeState& scope) {
  if (t.kind == Term::Kind::Root) {
    if (scope.vocab != Vocabulary::RootedTree) {
      throw std::invalid_argument("vocabulary error: R is a tree-vocabulary constant");
    }
    return;
  }
  if (std::find(scope.element_vars.begin(), scope.element_vars.end(), t.name) ==
      scope.element_vars.end()) {
    throw std::invalid_argument("scope error: unbound element variable '" + t.name + "'");
  }
}

void validate_rec(const Formula& f, ScopeState& scope) {
  switch (f.kind) {
    case Formula::Kind::Adjacent:
      if (scope.vocab != Vocabulary::Graph) {
        throw std::invalid_argument("vocabulary error: ~ is a graph-vocabulary atom");
      }
      check_term(f.lhs, scope);
      check_term(f.rhs, scope);
      return;
    case Formula::Kind::ParentChild:
      if (scope.vocab != Vocabulary::RootedTree) {
        throw std::invalid_argument("vocabulary error: P(x,y) is a tree-vocabulary atom");
      }
      check_term(f.lhs, scope);
      check_term(f.rhs, scope);
      return;
    case Formula::Kind::Equal:
      check_term(f.lhs, scope);
      check_term(f.rhs, scope);
      return;
    case Formula::Kind::Membership:
      if (std::find(scope.set_vars.begin(), scope.set_vars.end(), f.set_name) ==
          scope.set_vars.end()) {
        throw std::invalid_argument("scope error: unbound set variable '" + f.set_name + "'");
      }
      check_term(f.lhs, scope);
      return;
    case Formula::Kind::Not:
      validate_rec(*f.child, scope);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      validate_rec(*f.child, scope);
      validate_rec(*f.child2, scope);
      return;
    case Formula::Kind::ExistsElement:
    case Formula::Kind::ForallElement:
      scope.element_vars.push_back(f.var_name);
      validate_rec(*f.child, scope);
      scope.element_vars.pop_back();
      return;
    case Formula::Kind::ExistsSet:
    case Formula::Kind::ForallSet:
      scope.set_vars.push_back(f.set_name);
      validate_rec(*f.child, scope);
      scope.set_vars.pop_back();
      return;
  }
  throw std::logic_error("validate: bad kind");
}

std::string term_text(const Term& t) {
  return t.kind == Term::Kind::Root ? "R" : t.name;
}

}  // namespace

void validate_sentence(const Formula& f, Vocabulary vocab) {
  ScopeState scope;
  scope.vocab = vocab;
  validate_rec(f, scope);
}

std::string to_string(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Adjacent:
      return term_text(f.lhs) + " ~ " + term_text(f.rhs);
    case Formula::Kind::Equal:
      return term_text(f.lhs) + " = " + term_text(f.rhs);
    case Formula::Kind::ParentChild:
      return "P(" + term_text(f.lhs) + ", " + term_text(f.rhs) + ")";
    case Formula::Kind::Membership:
      return f.set_name + "(" + term_text(f.lhs) + ")";
    case Formula::Kind::Not:
      return "(!" + to_string(*f.child) + ")";
    case Formula::Kind::And:
      return "(" + to_string(*f.child) + " & " + to_string(*f.child2) + ")";
    case Formula::Kind::Or:
      return "(" + to_string(*f.child) + " | " + to_string(*f.child2) + ")";
    case Formula::Kind::Implies:
      return "(" + to_string(*f.child) + " -> " + to_string(*f.child2) + ")";
    case Formula::Kind::Iff:
      return "(" + to_string(*f.child) + " <-> " + to_string(*f.child2) + ")";
    case Formula::Kind::ExistsElement:
      return "(exists " + f.var_name + ". " + to_string(*f.child) + ")";
    case Formula::Kind::ForallElement:
      return "(forall " + f.var_name + ". " + to_string(*f.child) + ")";
    case Formula::Kind::ExistsSet:
      return "(exists " + f.set_name + ". " + to_string(*f.child) + ")";
    case Formula::Kind::ForallSet:
      return "(forall " + f.set_name + ". " + to_string(*f.child) + ")";
  }
  throw std::logic_error("to_string: bad kind");
}

}  // namespace eflab
