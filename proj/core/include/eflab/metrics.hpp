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
#include <vector>

#include "eflab/graph.hpp"

namespace eflab {

// Unreachable pairs carry an empty optional, never a sentinel value.
using Distance = std::optional<int>;

// All-pairs distances with the derived center statistics. For a
// disconnected graph every eccentricity is unreachable, radius and
// diameter are empty, and centers is empty.
struct GraphMetrics {
  std::vector<std::vector<Distance>> dist;  // dist[u][v]
  std::vector<Distance> eccentricity;
  Distance radius;
  Distance diameter;
  std::vector<int> centers;  // vertices of minimum eccentricity, sorted
};

GraphMetrics compute_metrics(const Graph& g);

// Single-source BFS distances.
std::vector<Distance> bfs_distances(const Graph& g, int source);

Distance graph_distance(const Graph& g, int u, int v);

// Shortest path from u to v as a vertex sequence (empty if unreachable).
std::vector<int> shortest_path(const Graph& g, int u, int v);

// Centers of a tree by repeated leaf removal: one or two vertices, sorted.
// O(n), no distance matrix needed.
std::vector<int> tree_centers(const Graph& tree);

}  // namespace eflab
