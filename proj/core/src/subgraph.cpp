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

#include "eflab/subgraph.hpp"

#include <stdexcept>
#include <vector>

#include "eflab/canonical.hpp"

namespace eflab {

Rational graph_density(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("graph_density: empty graph");
  return Rational(g.edge_count(), g.vertex_count());
}

bool is_strictly_balanced(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("is_strictly_balanced: empty graph");
  if (n > 16) throw std::invalid_argument("is_strictly_balanced: guarded to n <= 16");
  const long long e = g.edge_count();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    int size = 0;
    long long induced = 0;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) ++size;
    }
    for (const auto& [u, v] : g.edges()) {
      if ((mask & (1u << u)) && (mask & (1u << v))) ++induced;
    }
    // density(S) < density(G)  <=>  induced * n < e * |S|
    if (induced * n >= e * size) return false;
  }
  return true;
}

namespace {

struct HomSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;       // BFS order of pattern vertices
  std::vector<int> anchor;      // earlier-ordered pattern neighbor per step
  std::vector<int> image;       // pattern vertex -> host vertex, -1 if unset
  std::vector<char> used;       // host vertex already taken
  std::uint64_t count = 0;

  void extend(std::size_t step) {
    if (step == order.size()) {
      ++count;
      return;
    }
    const int pv = order[step];
    const int base = image[anchor[step]];
    for (const int* it = host.neighbors_begin(base); it != host.neighbors_end(base); ++it) {
      const int hv = *it;
      if (used[hv]) continue;
      bool ok = true;
      for (const int* pn = pattern.neighbors_begin(pv); pn != pattern.neighbors_end(pv); ++pn) {
        const int mapped = image[*pn];
        if (mapped != -1 && !host.has_edge(hv, mapped)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[pv] = hv;
      used[hv] = 1;
      extend(step + 1);
      used[hv] = 0;
      image[pv] = -1;
    }
  }
};

}  // namespace

std::uint64_t count_injective_homomorphisms(const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() == 0) throw std::invalid_argument("count: empty pattern");
  if (!is_connected(pattern)) throw std::invalid_argument("count: pattern must be connected");
  if (pattern.vertex_count() > host.vertex_count()) return 0;

  HomSearch s{host, pattern, {}, {}, {}, {}, 0};
  const int pn = pattern.vertex_count();
  std::vector<int> parent(pn, -1);
  std::vector<char> seen(pn, 0);
  s.order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    const int v = s.order[head];
    for (const int* it = pattern.neighbors_begin(v); it != pattern.neighbors_end(v); ++it) {
      if (!seen[*it]) {
        seen[*it] = 1;
        parent[*it] = v;
        s.order.push_back(*it);
      }
    }
  }
  s.anchor.resize(pn, -1);
  for (std::size_t i = 1; i < s.order.size(); ++i) s.anchor[i] = parent[s.order[i]];
  s.image.assign(pn, -1);
  s.used.assign(host.vertex_count(), 0);

  for (int hv = 0; hv < host.vertex_count(); ++hv) {
    s.image[s.order[0]] = hv;
    s.used[hv] = 1;
    s.extend(1);
    s.used[hv] = 0;
    s.image[s.order[0]] = -1;
  }
  return s.count;
}

std::uint64_t count_copies(const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() > 8) throw std::invalid_argument("count_copies: pattern guarded to 8 vertices");
  const std::uint64_t homs = count_injective_homomorphisms(host, pattern);
  return homs / automorphism_count(pattern);
}

}  // namespace eflab
