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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "eflab/canonical.hpp"
#include "eflab/constructions.hpp"
#include "eflab/ef_game.hpp"
#include "eflab/graph.hpp"
#include "eflab/metrics.hpp"
#include "eflab/structure.hpp"

namespace {

using eflab::build_diverging_tree;
using eflab::build_T0;
using eflab::distance_double;
using eflab::enumerate_trees;
using eflab::equiv;
using eflab::Forest;
using eflab::Graph;
using eflab::is_diverging;
using eflab::Logic;
using eflab::Player;
using eflab::reduce_tree;
using eflab::ReductionBudget;
using eflab::RootedTree;
using eflab::spoiler_play;
using eflab::StrategyTranscript;
using eflab::TreeCatalog;

Graph path_n(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph star_n(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

// Hub 0 with one chain per entry of legs.
Graph spider(const std::vector<int>& legs) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (const int len : legs) {
    int prev = 0;
    for (int step = 0; step < len; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, edges);
}

// Labeled tree from a Prufer sequence; every labeled tree on n >= 2 vertices
// has exactly one such sequence, which makes this an enumeration path
// independent of the catalog's leaf-attachment sweep.
Graph prufer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (const int v : seq) ++degree[v];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (const int v : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.insert(v);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

int unlabeled_tree_count_by_prufer(int n) {
  if (n == 1 || n == 2) return 1;
  std::set<eflab::CanonicalCode> codes;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    codes.insert(eflab::tree_canonical_code(prufer_decode(seq, n)));
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return static_cast<int>(codes.size());
}

std::map<int, int> order_histogram(const TreeCatalog& catalog) {
  std::map<int, int> hist;
  for (const Graph& t : catalog.trees) ++hist[t.vertex_count()];
  return hist;
}

int radius_of(const Graph& tree) {
  const int center = eflab::tree_centers(tree).front();
  int radius = 0;
  for (const auto& d : eflab::bfs_distances(tree, center)) {
    radius = std::max(radius, d.value());
  }
  return radius;
}

Forest forest_of(std::vector<Graph> trees) {
  Forest f;
  f.trees = std::move(trees);
  return f;
}

// Two branching vertices: hub 0 carries a chain of 2 and a leaf, its child 1
// carries a leaf and a chain of 2. Diameter 5, radius 3, diverging.
Graph double_t_tree() {
  return Graph(8, {{0, 1},
                   {1, 2},
                   {1, 3},
                   {3, 4},
                   {0, 5},
                   {5, 6},
                   {0, 7}});
}

// Hub 0 with a chain of 3 and two chains of 2: diameter 5, one branching
// vertex, duplicated branch pair. Contains no double_t_tree copy (only one
// vertex of degree 3, and equal order rules out proper containment).
Graph chain3_twin2_tree() {
  return Graph(8, {{0, 1},
                   {1, 2},
                   {2, 3},
                   {0, 4},
                   {4, 5},
                   {0, 6},
                   {6, 7}});
}

// Path on 6 with two extra leaves at vertex 1: diameter 5, the duplicate
// branches hang two edges below the centers.
Graph bristled_path_tree() {
  return Graph(8, {{0, 1},
                   {1, 2},
                   {2, 3},
                   {3, 4},
                   {4, 5},
                   {1, 6},
                   {1, 7}});
}

bool phases_subset_of_vocabulary(const StrategyTranscript& transcript) {
  const std::set<std::string> allowed{"distance-doubling", "branch-descent",
                                      "path-selection"};
  for (const std::string& phase : transcript.phases) {
    if (allowed.find(phase) == allowed.end()) return false;
  }
  return true;
}

bool has_phase(const StrategyTranscript& transcript, const std::string& want) {
  return std::find(transcript.phases.begin(), transcript.phases.end(),
                   want) != transcript.phases.end();
}

}  // namespace

TEST_CASE("tree catalog matches an independent labeled-tree enumeration") {
  const TreeCatalog catalog = enumerate_trees(8);
  const std::map<int, int> hist = order_histogram(catalog);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(hist.at(n) == unlabeled_tree_count_by_prufer(n));
  }
}

TEST_CASE("tree catalog has the frozen class counts per order") {
  const TreeCatalog catalog = enumerate_trees(9);
  CHECK(catalog.max_order == 9);
  const std::map<int, int> hist = order_histogram(catalog);
  const std::vector<int> expected{1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(hist.at(n) == expected[n - 1]);
  }
  CHECK(catalog.trees.size() == 95);  // cumulative count through order 9
}

TEST_CASE("tree catalog entries are sorted trees with distinct codes") {
  const TreeCatalog catalog = enumerate_trees(7);
  std::vector<eflab::CanonicalCode> codes;
  for (const Graph& t : catalog.trees) {
    CHECK(eflab::is_tree(t));
    codes.push_back(eflab::tree_canonical_code(t));
  }
  CHECK(std::is_sorted(codes.begin(), codes.end()));
  CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("tree catalog guard and degenerate orders") {
  CHECK(enumerate_trees(0).trees.empty());
  CHECK(enumerate_trees(1).trees.size() == 1);
  CHECK(enumerate_trees(12).trees.size() == 987);
  CHECK_THROWS_AS(enumerate_trees(13), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_trees(-1), std::invalid_argument);
}

TEST_CASE("reference forest contains a copies of every class in range") {
  const Forest f = build_T0(1, 2);
  CHECK(f.trees.size() == 4);  // two classes (orders 1, 2), two copies each
  CHECK(f.total_vertices() == 6);

  const Forest g = build_T0(2, 1);
  CHECK(g.trees.size() == 3);  // one class each at orders 1, 2, 3
  CHECK(g.total_vertices() == 6);

  const Forest h = build_T0(2, 2, eflab::T0Variant::kUpToL);
  CHECK(h.trees.size() == enumerate_trees(2).trees.size() * 2);

  CHECK(build_T0(3, 0).trees.empty());
  CHECK_THROWS_AS(build_T0(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_T0(1, -1), std::invalid_argument);
  CHECK_THROWS_AS(build_T0(12, 1), std::invalid_argument);  // order 13 needed
  CHECK(build_T0(12, 1, eflab::T0Variant::kUpToL).trees.size() == 987);
}

TEST_CASE("reference forest multiplicity is uniform across classes") {
  const Forest f = build_T0(3, 3);
  std::map<eflab::CanonicalCode, int> copies;
  for (const Graph& t : f.trees) ++copies[eflab::tree_canonical_code(t)];
  CHECK(copies.size() == enumerate_trees(4).trees.size());
  for (const auto& [code, count] : copies) CHECK(count == 3);
}

TEST_CASE("divergence predicate on reference trees") {
  CHECK(is_diverging(Graph(1, {})));
  CHECK(is_diverging(path_n(2)));
  CHECK_FALSE(is_diverging(path_n(3)));  // two equal branches at the center
  CHECK(is_diverging(path_n(4)));
  CHECK_FALSE(is_diverging(path_n(5)));
  CHECK(is_diverging(path_n(8)));
  CHECK_FALSE(is_diverging(star_n(3)));
  CHECK(is_diverging(spider({3, 2, 1})));
  CHECK_FALSE(is_diverging(spider({2, 2, 1})));
  CHECK(is_diverging(double_t_tree()));
  CHECK_FALSE(is_diverging(chain3_twin2_tree()));
  CHECK_FALSE(is_diverging(bristled_path_tree()));
}

TEST_CASE("divergence predicate rejects non-trees") {
  CHECK_THROWS_AS(is_diverging(Graph(3, {{0, 1}, {1, 2}, {0, 2}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_diverging(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("divergence agrees with trivial rooted automorphism groups") {
  // A rooted tree has a trivial automorphism group exactly when every
  // vertex's child subtrees are pairwise non-isomorphic.
  for (const Graph& t : enumerate_trees(8).trees) {
    bool expected = true;
    for (const int c : eflab::tree_centers(t)) {
      if (eflab::rooted_automorphism_count(RootedTree::from_tree(t, c)) != 1) {
        expected = false;
      }
    }
    CAPTURE(eflab::tree_canonical_code(t));
    CHECK(is_diverging(t) == expected);
  }
}

TEST_CASE("diverging tree builder covers the feasible range for i = 3") {
  for (const int order : {8, 9}) {
    CAPTURE(order);
    const Graph t = build_diverging_tree(order, 3);
    CHECK(t.vertex_count() == order);
    CHECK(eflab::is_tree(t));
    CHECK(is_diverging(t));
    CHECK(radius_of(t) == 4);
  }
  CHECK_THROWS_AS(build_diverging_tree(7, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_diverging_tree(10, 3), std::invalid_argument);
}

TEST_CASE("diverging tree builder covers orders 10..14 for i = 4") {
  for (int order = 10; order <= 14; ++order) {
    CAPTURE(order);
    const Graph t = build_diverging_tree(order, 4);
    CHECK(t.vertex_count() == order);
    CHECK(is_diverging(t));
    CHECK(radius_of(t) == 5);
  }
  CHECK_THROWS_AS(build_diverging_tree(9, 4), std::invalid_argument);
  // Orders 33 and 34 are rejected for different reasons (practical guard
  // versus range), both as invalid_argument.
  CHECK_THROWS_AS(build_diverging_tree(33, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_diverging_tree(34, 4), std::invalid_argument);
}

TEST_CASE("diverging tree builder reaches larger seeds") {
  const Graph t = build_diverging_tree(12, 5);
  CHECK(t.vertex_count() == 12);
  CHECK(is_diverging(t));
  CHECK(radius_of(t) == 6);

  const Graph u = build_diverging_tree(18, 5);
  CHECK(u.vertex_count() == 18);
  CHECK(is_diverging(u));
  CHECK(radius_of(u) == 6);

  CHECK_THROWS_AS(build_diverging_tree(8, 2), std::invalid_argument);
}

TEST_CASE("reduction prunes identical sibling subtrees down to z") {
  const RootedTree star10 = RootedTree::from_tree(star_n(10), 0);
  const auto result =
      reduce_tree(star10, 1, Logic::FO, ReductionBudget{1, {}, 1, {}});
  CHECK(result.tree.vertex_count() == 2);
  CHECK(result.verified);
  CHECK(result.passes >= 2);  // one changing pass plus the stable pass
}

TEST_CASE("reduction reaches a fixpoint") {
  const RootedTree star10 = RootedTree::from_tree(star_n(10), 0);
  const auto once =
      reduce_tree(star10, 1, Logic::FO, ReductionBudget{1, {}, 1, {}});
  const auto twice =
      reduce_tree(once.tree, 1, Logic::FO, ReductionBudget{1, {}, 1, {}});
  CHECK(twice.tree == once.tree);
  CHECK(twice.passes == 1);
}

TEST_CASE("reduction collapses repeated subtrees along a root path") {
  const RootedTree chain5 = RootedTree::from_tree(path_n(5), 0);
  const auto result =
      reduce_tree(chain5, 1, Logic::FO, ReductionBudget{1, {}, 5, {}});
  // One round distinguishes only root / root-neighbor / farther vertex, so
  // the chain collapses to the shortest tree realizing all three.
  CHECK(result.tree.vertex_count() == 3);
  CHECK(result.tree.depth() == 2);
  CHECK(result.verified);
}

TEST_CASE("reduction verification rejects an undersized z") {
  const RootedTree star5 = RootedTree::from_tree(star_n(5), 0);
  CHECK_THROWS_AS(
      reduce_tree(star5, 2, Logic::FO, ReductionBudget{2, {}, 1, {}}),
      std::runtime_error);
  CHECK_THROWS_AS(
      reduce_tree(star5, 2, Logic::MSO, ReductionBudget{2, {}, 1, {}}),
      std::runtime_error);
  // z = 2 is safe at two rounds: the game cannot count past two copies.
  const auto ok =
      reduce_tree(star5, 2, Logic::FO, ReductionBudget{2, {}, 2, {}});
  CHECK(ok.tree.vertex_count() == 3);
  CHECK(ok.verified);
}

TEST_CASE("reduction guards and unverified mode") {
  const RootedTree star5 = RootedTree::from_tree(star_n(5), 0);
  CHECK_THROWS_AS(
      reduce_tree(star5, -1, Logic::FO, ReductionBudget{1, {}, 1, {}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      reduce_tree(star5, 1, Logic::FO, ReductionBudget{1, {}, 0, {}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      reduce_tree(star5, 3, Logic::FO, ReductionBudget{3, {}, 1, {}}),
      std::invalid_argument);
  const RootedTree star40 = RootedTree::from_tree(star_n(40), 0);
  CHECK_THROWS_AS(
      reduce_tree(star40, 1, Logic::FO, ReductionBudget{1, {}, 1, {}}),
      std::invalid_argument);

  const auto raw = reduce_tree(star40, 3, Logic::FO,
                               ReductionBudget{3, {}, 2, {}}, false);
  CHECK_FALSE(raw.verified);
  CHECK(raw.tree.vertex_count() == 3);
}

TEST_CASE("reduction of random trees verifies and shrinks monotonically") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    std::vector<int> seq(std::max(0, n - 2));
    for (int& v : seq) v = static_cast<int>(rng() % n);
    const RootedTree t = RootedTree::from_tree(prufer_decode(seq, n), 0);
    const bool mso = trial % 2 == 0;
    const int k = trial % 3 == 0 ? 1 : 2;
    const long long z = mso ? 3 : 2;
    CAPTURE(trial);
    CAPTURE(n);
    const auto result = reduce_tree(t, k, mso ? Logic::MSO : Logic::FO,
                                    ReductionBudget{k, {}, z, {}});
    CHECK(result.verified);
    CHECK(result.tree.vertex_count() <= t.vertex_count());
    const auto again = reduce_tree(result.tree, k, mso ? Logic::MSO : Logic::FO,
                                   ReductionBudget{k, {}, z, {}});
    CHECK(again.tree == result.tree);
  }
}

TEST_CASE("scripted strategy wins when only one side has the marked tree") {
  // Diameter mismatch everywhere: the other forest is matchings and points.
  const Graph s = path_n(4);
  const Forest a = forest_of({path_n(4), Graph(1, {})});
  const Forest b = forest_of({path_n(2), Graph(1, {})});
  const StrategyTranscript t = spoiler_play(a, b, s, 4);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() <= 4);
  CHECK(phases_subset_of_vocabulary(t));
  CHECK(has_phase(t, "distance-doubling"));
  CHECK_FALSE(equiv(a.to_graph(), b.to_graph(), 4, Logic::FO));
}

TEST_CASE("scripted strategy handles a single-edge marked tree") {
  const Graph s = path_n(2);
  const Forest a = forest_of({path_n(2), Graph(1, {})});
  const Forest b = forest_of({Graph(1, {}), Graph(1, {}), Graph(1, {})});
  const StrategyTranscript t = spoiler_play(a, b, s, 4);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() <= 2);
  CHECK(phases_subset_of_vocabulary(t));
  CHECK_FALSE(equiv(a.to_graph(), b.to_graph(), 4, Logic::FO));
}

TEST_CASE("scripted strategy descends through equal-diameter components") {
  // The other side realizes the same diameter with a diverging tree that is
  // not a copy, so central replies force branch descent.
  const Graph s = double_t_tree();
  const Forest a = forest_of({double_t_tree()});
  const Forest b = forest_of({spider({3, 2, 1}), Graph(1, {})});
  const StrategyTranscript t = spoiler_play(a, b, s, 5);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() <= 5);
  CHECK(phases_subset_of_vocabulary(t));
  CHECK(has_phase(t, "branch-descent"));
}

TEST_CASE("scripted strategy selects a path to duplicated branches") {
  const Graph s = spider({3, 2, 1});
  const Forest a = forest_of({spider({3, 2, 1}), Graph(1, {})});
  const Forest b = forest_of({bristled_path_tree()});
  const StrategyTranscript t = spoiler_play(a, b, s, 5);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() <= 5);
  CHECK(phases_subset_of_vocabulary(t));
  CHECK(has_phase(t, "path-selection"));
}

TEST_CASE("scripted strategy mixes path selection with a final descent") {
  const Graph s = double_t_tree();
  const Forest a = forest_of({double_t_tree()});
  const Forest b = forest_of({chain3_twin2_tree()});
  const StrategyTranscript t = spoiler_play(a, b, s, 5);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() <= 5);
  CHECK(phases_subset_of_vocabulary(t));
  CHECK(has_phase(t, "path-selection"));
  CHECK(has_phase(t, "branch-descent"));
}

TEST_CASE("scripted strategy stretches over a two-probe diametral pair") {
  const Graph s = double_t_tree();
  const Forest a = forest_of({double_t_tree()});
  const Forest b = forest_of({path_n(5)});
  const StrategyTranscript t = spoiler_play(a, b, s, 5);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() <= 5);
  CHECK(t.phases == std::vector<std::string>{"distance-doubling"});
  CHECK_FALSE(equiv(a.to_graph(), b.to_graph(), 5, Logic::FO));
}

TEST_CASE("scripted strategy against an empty forest wins immediately") {
  const Graph s = path_n(2);
  const Forest a = forest_of({path_n(2)});
  const Forest b = forest_of({});
  const StrategyTranscript t = spoiler_play(a, b, s, 3);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() == 1);
}

TEST_CASE("scripted strategy transcripts alternate movers") {
  const Graph s = spider({3, 2, 1});
  const Forest a = forest_of({spider({3, 2, 1}), Graph(1, {})});
  const Forest b = forest_of({bristled_path_tree()});
  const StrategyTranscript t = spoiler_play(a, b, s, 5);
  REQUIRE_FALSE(t.rounds.empty());
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    CHECK(t.rounds[i].mover ==
          (i % 2 == 0 ? Player::Spoiler : Player::Duplicator));
    CHECK_FALSE(t.rounds[i].is_subset);
  }
  // Spoiler's opening move is the marked component's central vertex.
  CHECK(t.rounds[0].side == 0);
}

TEST_CASE("scripted strategy validates its preconditions") {
  const Graph s = path_n(4);
  const Forest a = forest_of({path_n(4), Graph(1, {})});
  const Forest b = forest_of({path_n(2)});
  CHECK_THROWS_AS(spoiler_play(a, b, s, 2), std::invalid_argument);
  CHECK_THROWS_AS(spoiler_play(a, b, s, 7), std::invalid_argument);
  CHECK_THROWS_AS(spoiler_play(a, b, path_n(3), 4), std::invalid_argument);
  CHECK_THROWS_AS(spoiler_play(a, b, path_n(8), 5), std::invalid_argument);
  CHECK_THROWS_AS(spoiler_play(a, a, s, 4), std::invalid_argument);
  CHECK_THROWS_AS(spoiler_play(b, b, s, 4), std::invalid_argument);
  CHECK_THROWS_AS(
      spoiler_play(a, forest_of({path_n(5), path_n(4)}), s, 4),
      std::invalid_argument);
  CHECK_THROWS_AS(
      spoiler_play(forest_of({path_n(4), path_n(13)}), b, s, 4),
      std::invalid_argument);
  CHECK_THROWS_AS(
      spoiler_play(a, b, Graph(3, {{0, 1}, {1, 2}, {0, 2}}), 4),
      std::invalid_argument);
}

TEST_CASE("distance doubling separates pinned distances 2 and 3") {
  const Graph a = path_n(3);
  const Graph b = path_n(4);
  const std::vector<std::pair<int, int>> pins{{0, 0}, {2, 3}};
  const StrategyTranscript t = distance_double(a, b, pins, 2);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() <= 2);
  CHECK(t.phases == std::vector<std::string>{"distance-doubling"});
  CHECK_THROWS_AS(distance_double(a, b, pins, 1), std::invalid_argument);
}

TEST_CASE("distance doubling separates distance 4 from unreachable") {
  const Graph a = path_n(5);
  const Graph b = Graph(2, {});
  const std::vector<std::pair<int, int>> pins{{0, 0}, {4, 1}};
  const StrategyTranscript t = distance_double(a, b, pins, 3);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() <= 3);
  CHECK_THROWS_AS(distance_double(a, b, pins, 2), std::invalid_argument);
}

TEST_CASE("distance doubling validates pins and mismatch presence") {
  const Graph a = path_n(4);
  const Graph b = path_n(4);
  CHECK_THROWS_AS(distance_double(a, b, {{0, 0}, {3, 3}}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(distance_double(a, b, {{0, 0}, {5, 3}}, 4),
                  std::invalid_argument);
  // Inconsistent pins: the position is already decided without any rounds.
  const StrategyTranscript t =
      distance_double(a, b, {{0, 0}, {1, 3}}, 4);
  CHECK(t.outcome.winner == Player::Spoiler);
  CHECK(t.rounds_played() == 0);
}

TEST_CASE("distance doubling on random path pairs stays within its bound") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int la = 2 + static_cast<int>(rng() % 8);
    const int lb = 2 + static_cast<int>(rng() % 8);
    const Graph a = path_n(la);
    const Graph b = path_n(lb);
    const int da = la - 1;
    const int db = lb - 1;
    if (da == db) continue;
    const std::vector<std::pair<int, int>> pins{{0, 0}, {la - 1, lb - 1}};
    int need = 0;
    while ((1 << need) < std::min(da, db) + 1) ++need;
    CAPTURE(da);
    CAPTURE(db);
    const StrategyTranscript t = distance_double(a, b, pins, need);
    CHECK(t.outcome.winner == Player::Spoiler);
    CHECK(t.rounds_played() <= need);
  }
}
