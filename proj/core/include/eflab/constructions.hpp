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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eflab/canonical.hpp"
#include "eflab/ef_game.hpp"
#include "eflab/graph.hpp"

namespace eflab {

// One representative per isomorphism class of unlabeled trees, complete for
// every order in 1..max_order.
struct TreeCatalog {
  int max_order = 0;
  // Sorted by tree_canonical_code; codes are pairwise distinct.
  std::vector<Graph> trees;
};

// Builds the catalog by repeated leaf attachment with canonical-code
// deduplication. Every tree on v+1 vertices arises from a tree on v vertices
// by attaching one leaf, so the sweep is complete. Guarded to max_order <= 12
// (551 classes); throws std::invalid_argument beyond the guard or below 0.
TreeCatalog enumerate_trees(int max_order);

// The two variants of the reference forest: one copy set per catalog tree of
// order at most l+1, or at most l.
enum class T0Variant { kUpToLPlusOne, kUpToL };

// Forest with exactly `a` copies of every catalog tree in the selected order
// range, in catalog order. a = 0 gives the empty forest.
Forest build_T0(int l, int a, T0Variant variant = T0Variant::kUpToLPlusOne);

// A tree is diverging when for every central vertex c, rooting at c leaves
// every vertex with pairwise non-isomorphic child subtrees. Throws
// std::invalid_argument on non-trees. A single vertex is diverging.
bool is_diverging(const Graph& t);

// Smallest-order witnesses exist for 2i+2 <= order <= 2*T(i-1)+1 where T is
// the iterated-exponential tower; this builder seeds with the path on 2i+2
// vertices (radius i+1, diverging) and grows it by depth-first leaf
// attachment, accepting only attachments the checker verifies to preserve
// radius i+1 and divergence. A catalog scan backs up the search for orders
// <= 12. Practical guard: order <= 32. Throws std::invalid_argument outside
// the range and std::runtime_error when the search fails.
Graph build_diverging_tree(int order, int i);

// Caps for the reduction: z bounds how many children per equivalence group
// survive; f_values and depth_cap record the class-count budget f(k, 0..k)
// when known (entries absent when too large to compute).
struct ReductionBudget {
  int k = 1;
  std::vector<std::optional<long long>> f_values;
  long long z = 1;
  std::optional<long long> depth_cap;
};

struct ReductionResult {
  RootedTree tree;
  // True when the output was proven k-round equivalent to the input by game
  // search; false in unverified mode.
  bool verified = false;
  // Fixpoint iterations, counting the final no-change pass.
  int passes = 0;
};

// Shrinks a rooted tree while preserving its k-round game value:
// (a) children of each vertex are grouped by the game value of their
// subtrees and all but min(multiplicity, z) per group are deleted;
// (b) when an ancestor w1 and its descendant w2 carry equivalent subtrees,
// the subtree at w1 is replaced by the one at w2.
// Both steps iterate to a fixpoint. In verified mode (k <= 2 only) the
// output is checked equivalent to the input by game search; a failed check
// throws std::runtime_error, which signals that z is below the safe cap for
// this k and logic. Guarded to 32 vertices in verified mode.
ReductionResult reduce_tree(const RootedTree& t, int k, Logic logic,
                            const ReductionBudget& budget, bool verify = true);

// One move of a played-out game. Duplicator rounds carry the phase of the
// Spoiler move they answer.
struct TranscriptRound {
  Player mover = Player::Spoiler;
  int side = 0;  // 0 = left/A, 1 = right/B
  bool is_subset = false;
  int vertex = -1;
  std::string phase;
  std::string annotation;
};

struct StrategyTranscript {
  std::vector<TranscriptRound> rounds;
  GameOutcome outcome{Player::Duplicator, std::nullopt};
  // Phase labels in the order entered along the recorded line.
  std::vector<std::string> phases;

  int rounds_played() const;
};

// Scripted Spoiler strategy for distinguishing a forest containing a copy of
// a diverging tree S from one containing none, walked against every
// Duplicator reply: the outcome is Spoiler only if all reply branches lose
// within k rounds. The recorded line follows Duplicator's most resistant
// replies. Phases: "distance-doubling" (component diameter or pinned-pair
// distance mismatches, resolved by midpoint halving), "branch-descent"
// (descent through diverging subtrees along unmatched branches), and
// "path-selection" (walk to a duplicated branch pair in a non-diverging
// component, including the duplicate-branch switch).
//
// Preconditions (std::invalid_argument): S is a diverging tree with radius
// in [1, k-2]; A has a component isomorphic to S; B contains no subgraph
// copy of S; both forests have at most 16 vertices; k <= 6. A position the
// case analysis does not anticipate throws std::logic_error with the state
// spelled out.
StrategyTranscript spoiler_play(const Forest& a, const Forest& b,
                                const Graph& s, int k);

// The midpoint-halving fragment alone: pins must contain a pair of pinned
// pairs whose distances differ (possibly one unreachable), and the round
// budget must cover ceil(log2(smaller distance + 1)). Throws
// std::invalid_argument when no mismatch exists or the budget is short.
StrategyTranscript distance_double(const Graph& a, const Graph& b,
                                   const std::vector<std::pair<int, int>>& pins,
                                   int rounds);

}  // namespace eflab
