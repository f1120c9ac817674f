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

#include "eflab/structure.hpp"

#include <stdexcept>
#include <utility>

namespace eflab {

Structure::Structure(Graph g) : vocab_(Vocabulary::Graph), graph_(std::move(g)) {}

Structure::Structure(RootedTree t)
    : vocab_(Vocabulary::RootedTree), graph_(t.underlying_graph()), tree_(std::move(t)) {}

bool Structure::parent_child(int parent, int child) const {
  if (!tree_) throw std::logic_error("parent_child: graph-vocabulary structure");
  return child != tree_->root() && tree_->parent(child) == parent;
}

int Structure::root() const {
  if (!tree_) throw std::logic_error("root: graph-vocabulary structure");
  return tree_->root();
}

const RootedTree& Structure::tree() const {
  if (!tree_) throw std::logic_error("tree: graph-vocabulary structure");
  return *tree_;
}

bool Structure::operator==(const Structure& other) const {
  if (vocab_ != other.vocab_) return false;
  if (vocab_ == Vocabulary::Graph) return graph_ == other.graph_;
  return *tree_ == *other.tree_;
}

}  // namespace eflab
