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

#include "eflab/formula.hpp"
#include "eflab/graph.hpp"

namespace eflab {

// A finite relational structure of either vocabulary. Graph vocabulary
// carries the symmetric adjacency relation; rooted-tree vocabulary carries
// the parent-child relation plus the root constant. The undirected view is
// kept for both so traversal code does not branch.
class Structure {
 public:
  explicit Structure(Graph g);
  explicit Structure(RootedTree t);

  Vocabulary vocab() const { return vocab_; }
  int vertex_count() const { return graph_.vertex_count(); }

  // Undirected adjacency; for trees this is the parent-child relation
  // forgetting direction.
  bool adjacent(int a, int b) const { return graph_.has_edge(a, b); }

  bool parent_child(int parent, int child) const;  // tree vocabulary only
  int root() const;                                // tree vocabulary only

  const Graph& underlying() const { return graph_; }
  const RootedTree& tree() const;

  bool operator==(const Structure& other) const;
  bool operator!=(const Structure& other) const { return !(*this == other); }

 private:
  Vocabulary vocab_;
  Graph graph_;
  std::optional<RootedTree> tree_;
};

}  // namespace eflab
