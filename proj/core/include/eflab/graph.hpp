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
#include <utility>
#include <vector>

namespace eflab {

// Simple undirected graph on vertices {0, ..., n-1}: no loops, no parallel
// edges. Immutable after construction. Edges are stored normalized (u < v)
// and sorted, plus a CSR adjacency built once, so equality and serialization
// are canonical for a fixed labeling.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

  // Neighbors of v in increasing order.
  const int* neighbors_begin(int v) const { return adjacency_.data() + offsets_[v]; }
  const int* neighbors_end(int v) const { return adjacency_.data() + offsets_[v + 1]; }
  std::vector<int> neighbors(int v) const {
    return std::vector<int>(neighbors_begin(v), neighbors_end(v));
  }

  Graph disjoint_union(const Graph& other) const;
  static Graph disjoint_union_copies(const Graph& g, int copies);

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> offsets_;    // size n_+1
  std::vector<int> adjacency_;  // size 2*m
};

// A connected component extracted as an induced subgraph. vertices[i] is the
// id the component vertex i had in the original graph.
struct Component {
  Graph graph;
  std::vector<int> vertices;
};

// Connected components in order of their smallest original vertex.
std::vector<Component> components(const Graph& g);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);
bool is_tree(const Graph& g);

// Rooted tree on {0, ..., n-1}: parent[v] for every non-root, parent[root]
// is -1. Edges are oriented parent -> child.
class RootedTree {
 public:
  RootedTree() = default;
  RootedTree(int n, int root, std::vector<int> parent);

  // Orients an unrooted tree away from the chosen root.
  static RootedTree from_tree(const Graph& tree, int root);

  int vertex_count() const { return n_; }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& parents() const { return parent_; }
  const std::vector<int>& children(int v) const { return children_[v]; }

  // Number of edges on the longest root-to-leaf path.
  int depth() const;
  // Vertices of the subtree below v (v first, preorder).
  std::vector<int> subtree_vertices(int v) const;
  // The subtree below v as a standalone rooted tree (v becomes vertex 0).
  RootedTree subtree(int v) const;

  Graph underlying_graph() const;

  bool operator==(const RootedTree& other) const {
    return n_ == other.n_ && root_ == other.root_ && parent_ == other.parent_;
  }
  bool operator!=(const RootedTree& other) const { return !(*this == other); }

 private:
  int n_ = 0;
  int root_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

// A forest kept as its list of tree components. Construction validates
// acyclicity; component order follows the smallest original vertex.
struct Forest {
  std::vector<Graph> trees;

  static Forest from_graph(const Graph& g);
  Graph to_graph() const;
  int total_vertices() const;
};

}  // namespace eflab
