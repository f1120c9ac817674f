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

#include <cstdint>
#include <string>
#include <vector>

#include "eflab/graph.hpp"

namespace eflab {

// Canonical codes are printable nested-parenthesis strings. Two structures
// receive the same code iff they are isomorphic (respecting roots or labels
// where those apply).
using CanonicalCode = std::string;

// Bottom-up code for a rooted tree: a leaf is "()", an inner vertex wraps
// the sorted codes of its children.
CanonicalCode rooted_canonical_code(const RootedTree& t);

// Code for an unrooted tree: minimum of the rooted codes taken at its one
// or two centers. Complete because isomorphisms map centers to centers.
CanonicalCode tree_canonical_code(const Graph& tree);

// Sorted component tree codes joined with '+'.
CanonicalCode forest_canonical_code(const Graph& forest);

// Exact canonical form for an arbitrary graph by minimizing the adjacency
// bit string over all vertex permutations. Exponential; guarded to n <= 8.
CanonicalCode graph_canonical_code(const Graph& g);

// Variants that carry a per-vertex label into the code. Labels must agree
// under any isomorphism for codes to match.
CanonicalCode labeled_rooted_code(const RootedTree& t, const std::vector<std::uint32_t>& labels);
CanonicalCode labeled_tree_code(const Graph& tree, const std::vector<std::uint32_t>& labels);

bool trees_isomorphic(const Graph& a, const Graph& b);
bool rooted_trees_isomorphic(const RootedTree& a, const RootedTree& b);

// |Aut| of a rooted tree: product over vertices of the factorials of the
// multiplicities of identical child subtree codes.
std::uint64_t rooted_automorphism_count(const RootedTree& t);

// |Aut| of a graph. Trees of any size use the center decomposition (two
// adjacent centers are handled by subdividing the central edge, which
// leaves the automorphism group unchanged); other graphs fall back to
// permutation brute force and are guarded to n <= 10.
std::uint64_t automorphism_count(const Graph& g);

}  // namespace eflab
