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

#include "eflab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eflab {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  return std::binary_search(neighbors_begin(u), neighbors_end(u), v);
}

Graph Graph::disjoint_union(const Graph& other) const {
  std::vector<std::pair<int, int>> edges = edges_;
  edges.reserve(edges_.size() + other.edges_.size());
  for (const auto& [u, v] : other.edges_) {
    edges.emplace_back(u + n_, v + n_);
  }
  return Graph(n_ + other.n_, std::move(edges));
}

Graph Graph::disjoint_union_copies(const Graph& g, int copies) {
  if (copies < 0) throw std::invalid_argument("disjoint_union_copies: negative count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(copies) * g.edges().size());
  for (int c = 0; c < copies; ++c) {
    const int shift = c * g.vertex_count();
    for (const auto& [u, v] : g.edges()) {
      edges.emplace_back(u + shift, v + shift);
    }
  }
  return Graph(copies * g.vertex_count(), std::move(edges));
}

std::vector<Component> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<Component> result;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (label[start] != -1) continue;
    const int id = static_cast<int>(result.size());
    std::vector<int> verts;
    stack.push_back(start);
    label[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (const int* it = g.neighbors_begin(v); it != g.neighbors_end(v); ++it) {
        if (label[*it] == -1) {
          label[*it] = id;
          stack.push_back(*it);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    std::vector<int> local(n, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (const int v : verts) {
      for (const int* it = g.neighbors_begin(v); it != g.neighbors_end(v); ++it) {
        if (v < *it) edges.emplace_back(local[v], local[*it]);
      }
    }
    result.push_back(Component{Graph(static_cast<int>(verts.size()), std::move(edges)),
                               std::move(verts)});
  }
  return result;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g).size() == 1;
}

bool is_acyclic(const Graph& g) {
  // A graph is a forest iff every component has exactly |V| - 1 edges.
  for (const Component& c : components(g)) {
    if (c.graph.edge_count() != c.graph.vertex_count() - 1) return false;
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && is_connected(g) &&
         g.edge_count() == g.vertex_count() - 1;
}

RootedTree::RootedTree(int n, int root, std::vector<int> parent)
    : n_(n), root_(root), parent_(std::move(parent)) {
  if (n <= 0) throw std::invalid_argument("rooted tree: need at least one vertex");
  if (root < 0 || root >= n) throw std::invalid_argument("rooted tree: root out of range");
  if (static_cast<int>(parent_.size()) != n) {
    throw std::invalid_argument("rooted tree: parent array size mismatch");
  }
  if (parent_[root_] != -1) throw std::invalid_argument("rooted tree: root must have parent -1");
  children_.resize(n_);
  for (int v = 0; v < n_; ++v) {
    if (v == root_) continue;
    const int p = parent_[v];
    if (p < 0 || p >= n_) throw std::invalid_argument("rooted tree: parent out of range");
    children_[p].push_back(v);
  }
  // Every vertex must reach the root; depth computation doubles as the check.
  std::vector<int> depth(n_, -1);
  depth[root_] = 0;
  for (int v = 0; v < n_; ++v) {
    int u = v;
    std::vector<int> chain;
    while (depth[u] == -1) {
      chain.push_back(u);
      u = parent_[u];
      if (u < 0 || static_cast<int>(chain.size()) > n_) {
        throw std::invalid_argument("rooted tree: parent pointers contain a cycle");
      }
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      depth[*it] = depth[u] + 1;
      u = *it;
    }
  }
}

RootedTree RootedTree::from_tree(const Graph& tree, int root) {
  if (!is_tree(tree)) throw std::invalid_argument("from_tree: graph is not a tree");
  if (root < 0 || root >= tree.vertex_count()) {
    throw std::invalid_argument("from_tree: root out of range");
  }
  std::vector<int> parent(tree.vertex_count(), -1);
  std::vector<int> stack = {root};
  std::vector<char> seen(tree.vertex_count(), 0);
  seen[root] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int* it = tree.neighbors_begin(v); it != tree.neighbors_end(v); ++it) {
      if (!seen[*it]) {
        seen[*it] = 1;
        parent[*it] = v;
        stack.push_back(*it);
      }
    }
  }
  return RootedTree(tree.vertex_count(), root, std::move(parent));
}

int RootedTree::depth() const {
  std::vector<int> depth(n_, 0);
  int best = 0;
  // children_ lists only point downward, so a preorder walk suffices.
  std::vector<int> stack = {root_};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    best = std::max(best, depth[v]);
    for (const int c : children_[v]) {
      depth[c] = depth[v] + 1;
      stack.push_back(c);
    }
  }
  return best;
}

std::vector<int> RootedTree::subtree_vertices(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("subtree_vertices: out of range");
  std::vector<int> result;
  std::vector<int> stack = {v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    result.push_back(u);
    for (auto it = children_[u].rbegin(); it != children_[u].rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return result;
}

RootedTree RootedTree::subtree(int v) const {
  const std::vector<int> verts = subtree_vertices(v);
  std::vector<int> local(n_, -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
  std::vector<int> parent(verts.size(), -1);
  for (int i = 1; i < static_cast<int>(verts.size()); ++i) {
    parent[i] = local[parent_[verts[i]]];
  }
  return RootedTree(static_cast<int>(verts.size()), 0, std::move(parent));
}

Graph RootedTree::underlying_graph() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n_ - 1);
  for (int v = 0; v < n_; ++v) {
    if (v != root_) edges.emplace_back(parent_[v], v);
  }
  return Graph(n_, std::move(edges));
}

Forest Forest::from_graph(const Graph& g) {
  if (!is_acyclic(g)) throw std::invalid_argument("forest: graph contains a cycle");
  Forest f;
  for (Component& c : components(g)) f.trees.push_back(std::move(c.graph));
  return f;
}

Graph Forest::to_graph() const {
  Graph acc(0, {});
  for (const Graph& t : trees) acc = acc.disjoint_union(t);
  return acc;
}

int Forest::total_vertices() const {
  int n = 0;
  for (const Graph& t : trees) n += t.vertex_count();
  return n;
}

}  // namespace eflab
