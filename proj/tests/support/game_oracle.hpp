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
//
// Reference game solver for tests: plain recursive minimax over raw moves.
// No memoization, no canonicalization, no move pruning, no shortcut at any
// round count. Exponential; keep positions tiny.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eflab/ef_game.hpp"

namespace oracle {

inline bool naive_pins_ok(const eflab::GamePosition& pos) {
  const eflab::Structure& a = pos.left;
  const eflab::Structure& b = pos.right;
  const bool tree = pos.vocab == eflab::Vocabulary::RootedTree;
  const auto& pins = pos.pinned_elements;
  for (std::size_t i = 0; i < pins.size(); ++i) {
    for (std::size_t j = 0; j < pins.size(); ++j) {
      if ((pins[i].first == pins[j].first) != (pins[i].second == pins[j].second)) return false;
      if (tree) {
        if (a.parent_child(pins[i].first, pins[j].first) !=
            b.parent_child(pins[i].second, pins[j].second)) {
          return false;
        }
      } else if (a.adjacent(pins[i].first, pins[j].first) !=
                 b.adjacent(pins[i].second, pins[j].second)) {
        return false;
      }
    }
    if (tree) {
      if ((pins[i].first == a.root()) != (pins[i].second == b.root())) return false;
      if (a.parent_child(a.root(), pins[i].first) !=
          b.parent_child(b.root(), pins[i].second)) {
        return false;
      }
      if (a.parent_child(pins[i].first, a.root()) !=
          b.parent_child(pins[i].second, b.root())) {
        return false;
      }
    }
    for (const auto& [mu, mv] : pos.pinned_subsets) {
      if (((mu >> pins[i].first) & 1u) != ((mv >> pins[i].second) & 1u)) return false;
    }
  }
  if (tree) {
    for (const auto& [mu, mv] : pos.pinned_subsets) {
      if (((mu >> a.root()) & 1u) != ((mv >> b.root()) & 1u)) return false;
    }
  }
  return true;
}

inline bool naive_duplicator_wins(const eflab::GamePosition& pos) {
  if (pos.rounds_left == 0) return naive_pins_ok(pos);
  const int nl = pos.left.vertex_count();
  const int nr = pos.right.vertex_count();
  // Spoiler element moves, either side.
  for (int side = 0; side < 2; ++side) {
    const int ns = side == 0 ? nl : nr;
    const int no = side == 0 ? nr : nl;
    for (int x = 0; x < ns; ++x) {
      bool answered = false;
      for (int y = 0; y < no && !answered; ++y) {
        eflab::GamePosition child = pos;
        child.rounds_left--;
        child.pinned_elements.push_back(side == 0 ? std::pair<int, int>{x, y}
                                                  : std::pair<int, int>{y, x});
        if (naive_duplicator_wins(child)) answered = true;
      }
      if (!answered) return false;
    }
  }
  if (pos.logic == eflab::Logic::MSO) {
    for (int side = 0; side < 2; ++side) {
      const int ns = side == 0 ? nl : nr;
      const int no = side == 0 ? nr : nl;
      const std::uint64_t tx = std::uint64_t{1} << ns;
      const std::uint64_t ty = std::uint64_t{1} << no;
      for (std::uint64_t x = 0; x < tx; ++x) {
        bool answered = false;
        for (std::uint64_t y = 0; y < ty && !answered; ++y) {
          eflab::GamePosition child = pos;
          child.rounds_left--;
          child.pinned_subsets.push_back(side == 0
                                             ? std::pair<std::uint64_t, std::uint64_t>{x, y}
                                             : std::pair<std::uint64_t, std::uint64_t>{y, x});
          if (naive_duplicator_wins(child)) answered = true;
        }
        if (!answered) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
