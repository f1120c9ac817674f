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

#include "eflab/graph.hpp"
#include "eflab/rational.hpp"

namespace eflab {

// Edge-to-vertex ratio e(G)/v(G) as an exact rational.
Rational graph_density(const Graph& g);

// True when every proper nonempty subgraph is strictly less dense than the
// whole graph. Checking induced vertex subsets suffices: any subgraph on a
// vertex set S is at most as dense as the one induced by S, and dropping
// edges alone always lowers density. Guarded to n <= 16.
bool is_strictly_balanced(const Graph& g);

// Injective edge-preserving maps from a connected pattern into the host.
// Backtracks along a BFS order of the pattern, so each placement extends
// through host adjacency lists and sparse hosts stay cheap.
std::uint64_t count_injective_homomorphisms(const Graph& host, const Graph& pattern);

// Subgraph copies of the pattern in the host: injective homomorphisms
// divided by |Aut(pattern)|. Pattern guarded to 8 vertices.
std::uint64_t count_copies(const Graph& host, const Graph& pattern);

}  // namespace eflab
