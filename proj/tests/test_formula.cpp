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

#include "doctest.h"
#include "eflab/formula.hpp"
#include "eflab/formula_library.hpp"
#include "formula_oracle.hpp"
#include "oracles.hpp"

using namespace eflab;

namespace {

FormulaPtr graph_sentence(const std::string& text) {
  return parse_formula(text, Vocabulary::Graph);
}

FormulaPtr tree_sentence(const std::string& text) {
  return parse_formula(text, Vocabulary::RootedTree);
}

const LibraryEntry& find_entry(const std::vector<LibraryEntry>& lib, const std::string& name) {
  for (const LibraryEntry& e : lib) {
    if (e.name == name) return e;
  }
  REQUIRE_MESSAGE(false, "library entry not found: ", name);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parser accepts the reference sentences") {
  CHECK_NOTHROW(graph_sentence("exists x. forall y. !(x ~ y)"));
  CHECK_THROWS_AS(graph_sentence("exists X. X(x)"), std::invalid_argument);   // x unbound
  CHECK_THROWS_AS(graph_sentence("exists x. P(R, x)"), std::invalid_argument);  // wrong vocab
  CHECK_NOTHROW(tree_sentence("exists x. P(R, x)"));
  CHECK_THROWS_AS(tree_sentence("exists x. exists y. x ~ y"), std::invalid_argument);
  CHECK_THROWS_AS(graph_sentence("exists x. x ~"), std::invalid_argument);
  CHECK_THROWS_AS(graph_sentence("exists x. x ~ y"), std::invalid_argument);  // y unbound
  CHECK_THROWS_AS(graph_sentence(""), std::invalid_argument);
  CHECK_THROWS_AS(graph_sentence("exists R. R = R"), std::invalid_argument);  // reserved
  CHECK_THROWS_AS(graph_sentence("exists x. x = x extra"), std::invalid_argument);
}

TEST_CASE("parser precedence and associativity") {
  // & binds tighter than |, which binds tighter than ->, then <->.
  const FormulaPtr f = graph_sentence(
      "forall x. forall y. x = y & x ~ y | x = y -> x ~ y <-> x = x");
  const Formula& body = *f->child->child;
  CHECK_EQ(body.kind, Formula::Kind::Iff);
  CHECK_EQ(body.child->kind, Formula::Kind::Implies);
  CHECK_EQ(body.child->child->kind, Formula::Kind::Or);
  CHECK_EQ(body.child->child->child->kind, Formula::Kind::And);

  // -> is right-associative.
  const FormulaPtr g = graph_sentence("forall x. x = x -> x = x -> x ~ x");
  const Formula& gb = *g->child;
  CHECK_EQ(gb.kind, Formula::Kind::Implies);
  CHECK_EQ(gb.child->kind, Formula::Kind::Equal);
  CHECK_EQ(gb.child2->kind, Formula::Kind::Implies);

  // A quantifier body extends as far right as possible.
  const FormulaPtr h = graph_sentence("forall x. x = x -> exists y. x ~ y & !(x = y)");
  CHECK_EQ(h->child->child2->kind, Formula::Kind::ExistsElement);
  CHECK_EQ(h->child->child2->child->kind, Formula::Kind::And);
}

TEST_CASE("quantifier depth") {
  const auto lib = formula_library(3, Vocabulary::Graph, Logic::MSO);
  CHECK_EQ(quantifier_depth(*find_entry(lib, "connectivity").formula), 3);
  CHECK_EQ(quantifier_depth(*Formula::adjacent(Term::variable("x"), Term::variable("y"))), 0);
  CHECK_EQ(quantifier_depth(*graph_sentence("exists x. exists y. x ~ y")), 2);
  // Parallel quantifiers do not stack: max, not sum.
  CHECK_EQ(quantifier_depth(*graph_sentence(
               "(exists x. exists y. x ~ y) & (exists z. z = z)")), 2);
}

TEST_CASE("quantifier depth structural identities on random ASTs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    oracle::SentenceGenerator gen(Vocabulary::Graph, true, rng);
    const FormulaPtr a = gen.generate(3);
    const FormulaPtr b = gen.generate(2);
    CHECK_EQ(quantifier_depth(*Formula::conjunction(a, b)),
             std::max(quantifier_depth(*a), quantifier_depth(*b)));
    CHECK_EQ(quantifier_depth(*Formula::exists("fresh", a)), 1 + quantifier_depth(*a));
    CHECK_EQ(quantifier_depth(*Formula::forall_set("Fresh", b)), 1 + quantifier_depth(*b));
    CHECK_EQ(quantifier_depth(*Formula::negation(a)), quantifier_depth(*a));
  }
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    oracle::SentenceGenerator gen(Vocabulary::Graph, true, rng);
    const FormulaPtr f = gen.generate(3);
    CHECK(structurally_equal(*f, *parse_formula(to_string(*f), Vocabulary::Graph)));
  }
  for (int trial = 0; trial < 100; ++trial) {
    oracle::SentenceGenerator gen(Vocabulary::RootedTree, true, rng);
    const FormulaPtr f = gen.generate(3);
    CHECK(structurally_equal(*f, *parse_formula(to_string(*f), Vocabulary::RootedTree)));
  }
  for (const LibraryEntry& e : formula_library(3, Vocabulary::Graph, Logic::MSO)) {
    CHECK(structurally_equal(*e.formula, *parse_formula(to_string(*e.formula), e.vocab)));
  }
}

TEST_CASE("connectivity sentence evaluates per its meaning") {
  const auto lib = formula_library(3, Vocabulary::Graph, Logic::MSO);
  const FormulaPtr conn = find_entry(lib, "connectivity").formula;
  CHECK(evaluate(*conn, oracle::path(3)));
  CHECK_FALSE(evaluate(*conn, Graph(2, {})));
  CHECK(evaluate(*conn, oracle::cycle(5)));
  CHECK_FALSE(evaluate(*conn, Graph(5, {{0, 1}, {2, 3}})));
  CHECK(evaluate(*conn, Graph(1, {})));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(6, 0.3, rng);
    CHECK_EQ(evaluate(*conn, g), is_connected(g));
  }
}

TEST_CASE("reference truth values") {
  CHECK_FALSE(evaluate(*graph_sentence("exists x. forall y. !(x ~ y)"), Graph(2, {{0, 1}})));
  CHECK(evaluate(*graph_sentence("exists x. forall y. !(x ~ y)"), Graph(3, {{0, 1}})));
  CHECK(evaluate(*graph_sentence("exists x. exists y. x ~ y"), oracle::path(3)));
  CHECK_FALSE(evaluate(*graph_sentence("exists x. exists y. x ~ y"), Graph(4, {})));

  const RootedTree chain(3, 0, {-1, 0, 1});
  CHECK(evaluate(*tree_sentence("exists x. P(R, x)"), chain));
  CHECK_FALSE(evaluate(*tree_sentence("exists x. P(R, x)"), RootedTree(1, 0, {-1})));
  CHECK(evaluate(*tree_sentence("exists x. exists y. P(x, y) & !(x = R)"), chain));
  CHECK(evaluate(*tree_sentence("forall x. x = R"), RootedTree(1, 0, {-1})));
}

TEST_CASE("set quantifier guard") {
  const FormulaPtr f = graph_sentence("exists X. exists x. X(x)");
  CHECK_NOTHROW(evaluate(*f, Graph(16, {})));
  CHECK_THROWS_AS(evaluate(*f, Graph(17, {})), std::invalid_argument);
  EvalOptions lowered;
  lowered.mso_subset_limit = 4;
  CHECK_THROWS_AS(evaluate(*f, Graph(5, {}), lowered), std::invalid_argument);
  // Element-only formulas are not size-limited.
  CHECK_NOTHROW(evaluate(*graph_sentence("exists x. x = x"), Graph(40, {})));
}

TEST_CASE("evaluator agrees with the naive substitution oracle") {
  std::mt19937_64 rng(67);
  int graph_pairs = 0;
  while (graph_pairs < 500) {
    oracle::SentenceGenerator gen(Vocabulary::Graph, true, rng);
    const FormulaPtr f = gen.generate(1 + static_cast<int>(rng() % 3));
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 8), 0.35, rng);
    CHECK_EQ(evaluate(*f, g), oracle::naive_evaluate(*f, g));
    ++graph_pairs;
  }
  for (int trial = 0; trial < 200; ++trial) {
    oracle::SentenceGenerator gen(Vocabulary::RootedTree, true, rng);
    const FormulaPtr f = gen.generate(1 + static_cast<int>(rng() % 3));
    const RootedTree t = oracle::random_rooted_tree(1 + static_cast<int>(rng() % 7), rng);
    CHECK_EQ(evaluate(*f, t), oracle::naive_evaluate(*f, t));
  }
}

TEST_CASE("De Morgan consistency over the library") {
  std::mt19937_64 rng(71);
  const auto graph_lib = formula_library(3, Vocabulary::Graph, Logic::MSO);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.4, rng);
    for (const LibraryEntry& e : graph_lib) {
      CHECK_EQ(evaluate(*Formula::negation(e.formula), g), !evaluate(*e.formula, g));
    }
  }
  const auto tree_lib = formula_library(3, Vocabulary::RootedTree, Logic::MSO);
  for (int trial = 0; trial < 50; ++trial) {
    const RootedTree t = oracle::random_rooted_tree(1 + static_cast<int>(rng() % 7), rng);
    for (const LibraryEntry& e : tree_lib) {
      CHECK_EQ(evaluate(*Formula::negation(e.formula), t), !evaluate(*e.formula, t));
    }
  }
}

TEST_CASE("set-free formulas evaluate identically regardless of the MSO guard") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    oracle::SentenceGenerator gen(Vocabulary::Graph, false, rng);
    const FormulaPtr f = gen.generate(1 + static_cast<int>(rng() % 3));
    REQUIRE_EQ(logic_of(*f), Logic::FO);
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 8), 0.35, rng);
    EvalOptions strangled;
    strangled.mso_subset_limit = 0;
    CHECK_EQ(evaluate(*f, g), evaluate(*f, g, strangled));
  }
}

TEST_CASE("library contents and declared depths") {
  for (const Vocabulary vocab : {Vocabulary::Graph, Vocabulary::RootedTree}) {
    const auto lib = formula_library(3, vocab, Logic::MSO);
    CHECK_GE(lib.size(), 8);
    for (const LibraryEntry& e : lib) {
      CHECK_EQ(quantifier_depth(*e.formula), e.declared_depth);
      CHECK_EQ(e.logic, logic_of(*e.formula));
      CHECK(structurally_equal(*e.formula, *parse_formula(e.text, e.vocab)));
    }
  }

  const auto fo2 = formula_library(2, Vocabulary::Graph, Logic::FO);
  bool has_edge_present = false;
  for (const LibraryEntry& e : fo2) {
    CHECK_LE(e.declared_depth, 2);
    CHECK_EQ(e.logic, Logic::FO);
    if (e.text == "exists x. exists y. x ~ y") has_edge_present = true;
  }
  CHECK(has_edge_present);

  const auto mso3 = formula_library(3, Vocabulary::Graph, Logic::MSO);
  bool connectivity_present = false;
  for (const LibraryEntry& e : mso3) {
    if (e.name == "connectivity") connectivity_present = true;
  }
  CHECK(connectivity_present);
  CHECK_THROWS_AS(formula_library(4, Vocabulary::Graph, Logic::FO), std::invalid_argument);
}
