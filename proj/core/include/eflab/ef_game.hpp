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
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eflab/structure.hpp"

namespace eflab {

enum class Player { Spoiler, Duplicator };
std::string to_string(Player p);

// Back-and-forth game state. Element pins and subset pins are stored in
// choice order; subsets are vertex bitmasks. For the rooted-tree vocabulary
// the root is an implicit pinned constant on each side. The caller's
// bookkeeping invariant is |pinned_elements| + |pinned_subsets| +
// rounds_left = k for a k-round game started from empty pins.
struct GamePosition {
  Structure left, right;
  std::vector<std::pair<int, int>> pinned_elements;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pinned_subsets;
  int rounds_left = 0;
  Logic logic = Logic::FO;
  Vocabulary vocab = Vocabulary::Graph;
};

GamePosition make_position(Structure left, Structure right, int rounds, Logic logic);

struct SpoilerMove {
  int side = 0;  // 0 = left, 1 = right
  bool is_subset = false;
  int vertex = -1;            // element move
  std::uint64_t subset = 0;   // subset move, bitmask on the chosen side

  bool operator==(const SpoilerMove&) const = default;
};

struct GameOutcome {
  Player winner = Player::Duplicator;
  // First winning move at the root in enumeration order: left elements
  // ascending, left subsets ascending as bitmasks, then the right side.
  // Absent when Duplicator wins, when no rounds remain, or when the pins
  // are already inconsistent (Spoiler has nothing left to do).
  std::optional<SpoilerMove> witness;
};

struct GameLimits {
  // Subset branching is 2^n, so the MSO ceiling is much lower.
  int fo_max_vertices = 24;
  int mso_max_vertices = 12;
};

// Shared solver state: size guards plus a memo table over canonicalized
// positions. Lookups and inserts are mutex-guarded and idempotent (a key
// always maps to the same value), so one context may serve concurrent
// game_value calls; results do not depend on interleaving.
class GameContext {
 public:
  GameContext() = default;
  explicit GameContext(GameLimits l) : limits(l) {}

  GameLimits limits;
  bool use_memo = true;
  std::size_t memo_soft_cap = 1u << 22;  // stop inserting past this, stay correct

  std::optional<bool> memo_lookup(const std::string& key);
  void memo_insert(const std::string& key, bool duplicator_wins);
  std::size_t memo_size();

 private:
  std::mutex mu_;
  std::unordered_map<std::string, bool> memo_;
};

// Partial-isomorphism check on a finished game: pinned elements must induce
// matching equalities, adjacencies (or parent-child links and root
// relations), and matching memberships in every pinned subset pair.
// Requires rounds_left == 0.
bool final_check(const GamePosition& pos);

// Exact winner by recursive minimax. Spoiler branches over both sides,
// elements and (in MSO) subsets; Duplicator answers on the opposite side.
// Replies that produce identical canonicalized successors are deduplicated.
// Throws when a structure exceeds the context's size guard.
GameOutcome game_value(const GamePosition& pos, GameContext& ctx);
GameOutcome game_value(const GamePosition& pos);

// Duplicator wins the k-round game from empty pins. Vocabularies of the two
// structures must agree.
bool equiv(const Structure& a, const Structure& b, int k, Logic logic, GameContext& ctx);
bool equiv(const Structure& a, const Structure& b, int k, Logic logic);
bool equiv(const Graph& a, const Graph& b, int k, Logic logic);
bool equiv(const RootedTree& a, const RootedTree& b, int k, Logic logic);

// Class id = index of the first representative in classification order, so
// ids are stable under re-running with the same input order.
using EquivClassId = int;

// Partition of the input by k-round equivalence; entry i is the class id of
// structures[i]. Pairwise results are transitively consistent because each
// structure is compared against class representatives only.
std::vector<EquivClassId> classify(const std::vector<Structure>& structures, int k,
                                   Logic logic, GameContext& ctx);
std::vector<EquivClassId> classify(const std::vector<Structure>& structures, int k,
                                   Logic logic);

// A structure with distinguished elements and subsets, the object whose
// k-round class the game measures.
struct PinnedStructure {
  Structure structure;
  std::vector<int> pinned_elements;
  std::vector<std::uint64_t> pinned_subsets;
};

// Duplicator wins the k-round game started with the pins preset pairwise.
// Pinned lists of unequal lengths never match.
bool pinned_equiv(const PinnedStructure& a, const PinnedStructure& b, int k,
                  Logic logic, GameContext& ctx);

// Class id of the target relative to a reference pool: the pool is
// classified first, then the target receives the id of the first equivalent
// pool member, or the next fresh id (pool size) when it matches none.
EquivClassId ehrenfeucht_value(const PinnedStructure& target,
                               const std::vector<PinnedStructure>& pool, int k,
                               Logic logic, GameContext& ctx);

}  // namespace eflab
