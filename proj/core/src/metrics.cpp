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

#include "eflab/metrics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace eflab {

std::vector<Distance> bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) throw std::invalid_argument("bfs: source out of range");
  std::vector<Distance> dist(n);
  std::deque<int> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const int* it = g.neighbors_begin(v); it != g.neighbors_end(v); ++it) {
      if (!dist[*it]) {
        dist[*it] = *dist[v] + 1;
        queue.push_back(*it);
      }
    }
  }
  return dist;
}

Distance graph_distance(const Graph& g, int u, int v) {
  return bfs_distances(g, u)[v];
}

std::vector<int> shortest_path(const Graph& g, int u, int v) {
  const std::vector<Distance> dist = bfs_distances(g, u);
  if (!dist[v]) return {};
  std::vector<int> path = {v};
  int cur = v;
  while (cur != u) {
    for (const int* it = g.neighbors_begin(cur); it != g.neighbors_end(cur); ++it) {
      if (dist[*it] && *dist[*it] == *dist[cur] - 1) {
        cur = *it;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> tree_centers(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("tree_centers: graph is not a tree");
  const int n = tree.vertex_count();
  if (n == 1) return {0};
  std::vector<int> degree(n);
  std::vector<int> frontier;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1) frontier.push_back(v);
  }
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(frontier.size());
    for (const int v : frontier) {
      degree[v] = 0;
      for (const int* it = tree.neighbors_begin(v); it != tree.neighbors_end(v); ++it) {
        if (degree[*it] > 0 && --degree[*it] == 1) next.push_back(*it);
      }
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

GraphMetrics compute_metrics(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 4096) throw std::invalid_argument("compute_metrics: graph too large for n^2 table");
  GraphMetrics m;
  m.dist.resize(n);
  m.eccentricity.assign(n, Distance{});
  bool connected = true;
  for (int v = 0; v < n; ++v) {
    m.dist[v] = bfs_distances(g, v);
    Distance ecc = 0;
    for (const Distance& d : m.dist[v]) {
      if (!d) {
        ecc.reset();
        break;
      }
      ecc = std::max(*ecc, *d);
    }
    m.eccentricity[v] = ecc;
    if (!ecc) connected = false;
  }
  if (!connected || n == 0) return m;
  int radius = *m.eccentricity[0];
  int diameter = *m.eccentricity[0];
  for (const Distance& e : m.eccentricity) {
    radius = std::min(radius, *e);
    diameter = std::max(diameter, *e);
  }
  m.radius = radius;
  m.diameter = diameter;
  for (int v = 0; v < n; ++v) {
    if (*m.eccentricity[v] == radius) m.centers.push_back(v);
  }
  return m;
}

}  // namespace eflab
