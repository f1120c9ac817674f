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

#include <map>
#include <set>

#include "doctest.h"
#include "eflab/canonical.hpp"
#include "eflab/graph.hpp"
#include "eflab/io.hpp"
#include "eflab/metrics.hpp"
#include "eflab/rational.hpp"
#include "eflab/rng.hpp"
#include "eflab/subgraph.hpp"
#include "oracles.hpp"

using namespace eflab;

TEST_CASE("graph construction normalizes, deduplicates, validates") {
  const Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
  CHECK_EQ(g.edge_count(), 2);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK_EQ(g.edges(), std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
  CHECK_EQ(g.degree(1), 1);
  CHECK_EQ(g.neighbors(2), std::vector<int>{1});

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("components: spec examples and partition property") {
  const std::vector<Component> isolated = components(Graph(3, {}));
  REQUIRE_EQ(isolated.size(), 3);
  for (const Component& c : isolated) CHECK_EQ(c.graph.vertex_count(), 1);

  const std::vector<Component> single = components(oracle::path(3));
  REQUIRE_EQ(single.size(), 1);
  CHECK_EQ(single[0].graph, oracle::path(3));

  const Graph mix(3, {{0, 1}});
  const std::vector<Component> two = components(mix);
  REQUIRE_EQ(two.size(), 2);
  CHECK_EQ(two[0].graph.edge_count(), 1);
  CHECK_EQ(two[1].graph.vertex_count(), 1);
  CHECK_EQ(two[0].vertices, std::vector<int>{0, 1});
  CHECK_EQ(two[1].vertices, std::vector<int>{2});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(8, 0.2, rng);
    std::set<int> seen;
    int edge_total = 0;
    for (const Component& c : components(g)) {
      for (const int v : c.vertices) {
        CHECK_FALSE(seen.count(v));
        seen.insert(v);
      }
      edge_total += c.graph.edge_count();
      // Edges preserved under the recorded vertex mapping.
      for (const auto& [u, v] : c.graph.edges()) {
        CHECK(g.has_edge(c.vertices[u], c.vertices[v]));
      }
    }
    CHECK_EQ(static_cast<int>(seen.size()), g.vertex_count());
    CHECK_EQ(edge_total, g.edge_count());
  }
}

TEST_CASE("connectivity and acyclicity predicates") {
  CHECK(is_connected(oracle::path(5)));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK(is_tree(oracle::path(5)));
  CHECK(is_tree(oracle::star(3)));
  CHECK_FALSE(is_tree(oracle::cycle(3)));
  CHECK_FALSE(is_tree(Graph(2, {})));
  CHECK(is_acyclic(Graph(3, {{0, 1}})));
  CHECK_FALSE(is_acyclic(oracle::cycle(4)));
}

TEST_CASE("metrics: paths, disconnected graphs, Floyd-Warshall cross-check") {
  const GraphMetrics p3 = compute_metrics(oracle::path(3));
  CHECK_EQ(p3.radius, Distance{1});
  CHECK_EQ(p3.diameter, Distance{2});
  CHECK_EQ(p3.centers, std::vector<int>{1});

  const GraphMetrics p5 = compute_metrics(oracle::path(5));
  CHECK_EQ(p5.radius, Distance{2});
  CHECK_EQ(p5.diameter, Distance{4});
  CHECK_EQ(p5.centers, std::vector<int>{2});

  const GraphMetrics split = compute_metrics(Graph(3, {{0, 1}}));
  CHECK_FALSE(split.radius.has_value());
  CHECK_FALSE(split.diameter.has_value());
  CHECK(split.centers.empty());
  CHECK_EQ(split.dist[0][1], Distance{1});
  CHECK_FALSE(split.dist[0][2].has_value());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(9, 0.25, rng);
    const GraphMetrics m = compute_metrics(g);
    CHECK_EQ(m.dist, oracle::floyd_warshall(g));
  }
}

TEST_CASE("shortest_path endpoints and length") {
  const Graph g = oracle::cycle(6);
  const std::vector<int> sp = shortest_path(g, 0, 3);
  REQUIRE_EQ(sp.size(), 4);
  CHECK_EQ(sp.front(), 0);
  CHECK_EQ(sp.back(), 3);
  for (std::size_t i = 0; i + 1 < sp.size(); ++i) CHECK(g.has_edge(sp[i], sp[i + 1]));
  CHECK(shortest_path(Graph(2, {}), 0, 1).empty());
}

TEST_CASE("tree_centers agrees with metrics centers") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph t = oracle::random_tree(2 + static_cast<int>(rng() % 11), rng);
    CHECK_EQ(tree_centers(t), compute_metrics(t).centers);
  }
  CHECK_EQ(tree_centers(Graph(1, {})), std::vector<int>{0});
  CHECK_THROWS_AS(tree_centers(oracle::cycle(3)), std::invalid_argument);
}

TEST_CASE("rooted canonical code is invariant under relabeling") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const RootedTree t = oracle::random_rooted_tree(n, rng);
    const CanonicalCode base = rooted_canonical_code(t);
    for (int p = 0; p < 20; ++p) {
      const RootedTree shuffled =
          oracle::permute_rooted_tree(t, oracle::random_permutation(n, rng));
      CHECK_EQ(rooted_canonical_code(shuffled), base);
    }
  }
}

TEST_CASE("rooted codes distinguish rooting choices") {
  // Path 0-1-2 rooted at the end vs at the middle.
  const Graph p3 = oracle::path(3);
  const CanonicalCode at_end = rooted_canonical_code(RootedTree::from_tree(p3, 0));
  const CanonicalCode at_middle = rooted_canonical_code(RootedTree::from_tree(p3, 1));
  CHECK_NE(at_end, at_middle);
  const CanonicalCode single = rooted_canonical_code(RootedTree(1, 0, {-1}));
  CHECK_EQ(single, rooted_canonical_code(RootedTree::from_tree(Graph(1, {}), 0)));
}

TEST_CASE("unrooted tree code equality matches brute-force isomorphism") {
  CHECK_EQ(tree_canonical_code(oracle::path(4)),
           tree_canonical_code(oracle::permute_graph(oracle::path(4), {2, 0, 3, 1})));
  CHECK_NE(tree_canonical_code(oracle::path(4)), tree_canonical_code(oracle::star(3)));

  std::mt19937_64 rng(19);
  const Graph base = oracle::random_tree(6, rng);
  const CanonicalCode base_code = tree_canonical_code(base);
  for (int p = 0; p < 50; ++p) {
    const Graph shuffled = oracle::permute_graph(base, oracle::random_permutation(6, rng));
    CHECK_EQ(tree_canonical_code(shuffled), base_code);
  }

  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph a = oracle::random_tree(n, rng);
    const Graph b = oracle::random_tree(n, rng);
    CHECK_EQ(tree_canonical_code(a) == tree_canonical_code(b), oracle::isomorphic(a, b));
    CHECK_EQ(trees_isomorphic(a, b), oracle::isomorphic(a, b));
    // The independent min-over-all-roots code must induce the same relation.
    CHECK_EQ(tree_canonical_code(a) == tree_canonical_code(b),
             oracle::min_root_code(a) == oracle::min_root_code(b));
  }
}

namespace {

// One representative per isomorphism class of trees on n vertices,
// deduplicated by the oracle's independent code.
std::vector<Graph> oracle_tree_classes(int n) {
  std::map<std::string, Graph> reps;
  for (const Graph& t : oracle::all_labeled_trees(n)) {
    reps.emplace(oracle::min_root_code(t), t);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : reps) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("automorphism counts: examples and all tree classes up to 7") {
  CHECK_EQ(automorphism_count(Graph(2, {{0, 1}})), 2);
  CHECK_EQ(automorphism_count(oracle::path(3)), 2);
  CHECK_EQ(automorphism_count(oracle::star(3)), 6);
  CHECK_EQ(automorphism_count(oracle::cycle(3)), 6);
  CHECK_EQ(automorphism_count(oracle::cycle(4)), 8);
  CHECK_EQ(automorphism_count(oracle::complete(4)), 24);
  // Two isomorphic components: internal swaps times the component swap.
  CHECK_EQ(automorphism_count(Graph(4, {{0, 1}, {2, 3}})), 8);
  CHECK_EQ(automorphism_count(Graph(4, {{0, 1}, {1, 2}})), 2);

  const int expected_classes[] = {0, 1, 1, 1, 2, 3, 6, 11};
  for (int n = 1; n <= 7; ++n) {
    const std::vector<Graph> reps = oracle_tree_classes(n);
    CHECK_EQ(static_cast<int>(reps.size()), expected_classes[n]);
    for (const Graph& t : reps) {
      CHECK_EQ(automorphism_count(t), oracle::automorphisms(t));
    }
  }
}

TEST_CASE("rooted automorphism counts match brute force on random trees") {
  // Rooted |Aut| equals the count of unrooted automorphisms fixing the root;
  // brute-forced here by permutations that fix the root label.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const RootedTree t = oracle::random_rooted_tree(n, rng);
    const Graph g = t.underlying_graph();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t expected = 0;
    do {
      if (perm[t.root()] != t.root()) continue;
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        for (int v = u + 1; v < n && ok; ++v) {
          if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
        }
      }
      // Fixing the root keeps parent-child orientation automatically.
      if (ok) ++expected;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK_EQ(rooted_automorphism_count(t), expected);
  }
}

TEST_CASE("density: spec examples and the tree density law") {
  CHECK_EQ(graph_density(Graph(2, {{0, 1}})), Rational(1, 2));
  CHECK_EQ(graph_density(oracle::path(3)), Rational(2, 3));
  CHECK_EQ(graph_density(oracle::cycle(3)), Rational(1));
  CHECK_THROWS_AS(graph_density(Graph(0, {})), std::invalid_argument);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    CHECK_EQ(graph_density(oracle::random_tree(n, rng)), Rational(n - 1, n));
  }
}

TEST_CASE("strict balance: examples and full-subgraph oracle") {
  CHECK(is_strictly_balanced(oracle::cycle(3)));
  CHECK(is_strictly_balanced(oracle::complete(4)));
  // Triangle with a pendant edge: the triangle inside is denser.
  CHECK_FALSE(is_strictly_balanced(Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})));

  for (int n = 1; n <= 7; ++n) {
    for (const Graph& t : oracle_tree_classes(n)) {
      CHECK(is_strictly_balanced(t));
    }
  }

  // Exhaustive n <= 4: every labeled graph, library vs oracle.
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int idx = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++idx) {
          if (mask & (1u << idx)) edges.emplace_back(u, v);
        }
      }
      const Graph g(n, std::move(edges));
      CHECK_EQ(is_strictly_balanced(g), oracle::strictly_balanced_full(g));
    }
  }

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(5, 0.5, rng);
    CHECK_EQ(is_strictly_balanced(g), oracle::strictly_balanced_full(g));
  }
}

TEST_CASE("copy counting: spec examples and the aut-product identity") {
  CHECK_EQ(count_copies(oracle::cycle(3), Graph(2, {{0, 1}})), 3);
  CHECK_EQ(count_copies(oracle::cycle(3), oracle::path(3)), 3);
  CHECK_EQ(count_copies(oracle::path(3), Graph(2, {{0, 1}})), 2);
  CHECK_EQ(count_copies(oracle::path(3), oracle::path(3)), 1);
  CHECK_EQ(count_copies(oracle::complete(4), oracle::cycle(3)), 4);

  const std::vector<Graph> patterns = {
      Graph(1, {}),        Graph(2, {{0, 1}}),  oracle::path(3), oracle::path(4),
      oracle::star(3),     oracle::cycle(3),    oracle::cycle(4),
  };
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph host = oracle::random_graph(6, 0.4, rng);
    for (const Graph& pattern : patterns) {
      const std::uint64_t copies = count_copies(host, pattern);
      CHECK_EQ(copies * automorphism_count(pattern),
               oracle::injective_homomorphisms(host, pattern));
      CHECK_EQ(count_injective_homomorphisms(host, pattern),
               oracle::injective_homomorphisms(host, pattern));
    }
  }
}

TEST_CASE("rooted tree subtree extraction") {
  // Path 1 -> 2 -> 3 as vertices 0 -> 1 -> 2.
  const RootedTree chain(3, 0, {-1, 0, 1});
  CHECK_EQ(chain.subtree(0), chain);
  const RootedTree below = chain.subtree(1);
  CHECK_EQ(below.vertex_count(), 2);
  CHECK_EQ(below.depth(), 1);
  CHECK_EQ(chain.subtree(2).vertex_count(), 1);
  CHECK_EQ(chain.depth(), 2);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const RootedTree t = oracle::random_rooted_tree(2 + static_cast<int>(rng() % 8), rng);
    const int v = static_cast<int>(rng() % t.vertex_count());
    const RootedTree sub = t.subtree(v);
    CHECK_EQ(sub.vertex_count(), static_cast<int>(t.subtree_vertices(v).size()));
    // Depth of the subtree equals the eccentricity of v inside it.
    const auto ecc = compute_metrics(sub.underlying_graph()).eccentricity[sub.root()];
    REQUIRE(ecc.has_value());
    CHECK_EQ(sub.depth(), *ecc);
  }
}

TEST_CASE("rooted tree validation") {
  CHECK_THROWS_AS(RootedTree(2, 0, {-1, -1}), std::invalid_argument);   // orphan
  CHECK_THROWS_AS(RootedTree(2, 0, {1, 0}), std::invalid_argument);     // root has parent
  CHECK_THROWS_AS(RootedTree(3, 0, {-1, 2, 1}), std::invalid_argument); // cycle
  CHECK_THROWS_AS(RootedTree(2, 5, {-1, 0}), std::invalid_argument);    // bad root
  CHECK_THROWS_AS(RootedTree::from_tree(oracle::cycle(3), 0), std::invalid_argument);
}

TEST_CASE("disjoint unions") {
  const Graph u = Graph(2, {{0, 1}}).disjoint_union(oracle::path(3));
  CHECK_EQ(u.vertex_count(), 5);
  CHECK_EQ(u.edge_count(), 3);
  CHECK_EQ(components(u).size(), 2);

  const Graph five = Graph::disjoint_union_copies(Graph(2, {{0, 1}}), 5);
  CHECK_EQ(five.vertex_count(), 10);
  CHECK_EQ(five.edge_count(), 5);
  CHECK_EQ(components(five).size(), 5);
  CHECK_EQ(Graph::disjoint_union_copies(oracle::path(3), 0).vertex_count(), 0);
}

TEST_CASE("forest decomposition") {
  const Graph g(5, {{0, 1}, {2, 3}});
  const Forest f = Forest::from_graph(g);
  REQUIRE_EQ(f.trees.size(), 3);
  CHECK_EQ(f.total_vertices(), 5);
  CHECK_EQ(f.to_graph().edge_count(), 2);
  CHECK_THROWS_AS(Forest::from_graph(oracle::cycle(3)), std::invalid_argument);
}

TEST_CASE("graph text format round-trips bit-exactly") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 9), 0.4, rng);
    const std::string text = serialize_graph(g);
    CHECK_EQ(parse_graph(text), g);
    CHECK_EQ(serialize_graph(parse_graph(text)), text);
  }
  CHECK_EQ(serialize_graph(oracle::path(3)), "3 2\n0 1\n1 2\n");
  CHECK_EQ(parse_graph(" 3  2\n 0 1\n1   2 "), oracle::path(3));
  CHECK_THROWS(parse_graph("3 2\n0 1\n"));        // missing edge
  CHECK_THROWS(parse_graph("3 1\n0 1\n9 9\n"));   // trailing content
  CHECK_THROWS(parse_graph("2 2\n0 1\n1 0\n"));   // duplicate edge
}

TEST_CASE("rooted tree text format round-trips bit-exactly") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const RootedTree t = oracle::random_rooted_tree(1 + static_cast<int>(rng() % 9), rng);
    const std::string text = serialize_rooted_tree(t);
    CHECK_EQ(parse_rooted_tree(text), t);
    CHECK_EQ(serialize_rooted_tree(parse_rooted_tree(text)), text);
    CHECK(looks_like_rooted_tree(text));
    CHECK_FALSE(looks_like_rooted_tree(serialize_graph(t.underlying_graph())));
  }
  const RootedTree chain(3, 1, {1, -1, 0});
  CHECK_EQ(serialize_rooted_tree(chain), "3 2\nroot 1\n0 2\n1 0\n");
  CHECK_THROWS(parse_rooted_tree("3 2\n0 1\n1 2\n"));            // missing root line
  CHECK_THROWS(parse_rooted_tree("3 2\nroot 0\n0 1\n0 1\n"));    // duplicate child
  CHECK_THROWS(parse_rooted_tree("3 1\nroot 0\n0 1\n"));         // m != n-1
}

TEST_CASE("rational arithmetic and parsing") {
  CHECK_EQ(Rational::parse("3/2"), Rational(3, 2));
  CHECK_EQ(Rational::parse("1.4"), Rational(7, 5));
  CHECK_EQ(Rational::parse("-0.5"), Rational(-1, 2));
  CHECK_EQ(Rational::parse("2"), Rational(2));
  CHECK_EQ(Rational(4, 6), Rational(2, 3));
  CHECK_EQ(Rational(1, -2), Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  CHECK_EQ(Rational(3, 2) * Rational(2, 3), Rational(1));
  CHECK_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  CHECK_EQ(Rational(7, 5).to_string(), "7/5");
  CHECK_EQ(Rational(2).to_string(), "2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.x"), std::invalid_argument);
}

TEST_CASE("counter rng: deterministic, order-independent trial streams") {
  const CounterRng a = CounterRng::for_trial(123, 5);
  CounterRng b = CounterRng::for_trial(123, 5);
  CounterRng c = CounterRng::for_trial(123, 6);
  CounterRng a2 = a;
  std::vector<std::uint64_t> first;
  for (int i = 0; i < 10; ++i) first.push_back(a2.next_u64());
  std::vector<std::uint64_t> again;
  for (int i = 0; i < 10; ++i) again.push_back(b.next_u64());
  CHECK_EQ(first, again);
  CHECK_NE(first[0], c.next_u64());

  CounterRng u = CounterRng::for_trial(9, 0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.next_unit();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(u.next_below(10) < 10);
  }
}
