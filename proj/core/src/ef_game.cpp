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

#include "eflab/ef_game.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace eflab {

std::string to_string(Player p) {
  return p == Player::Spoiler ? "Spoiler" : "Duplicator";
}

std::optional<bool> GameContext::memo_lookup(const std::string& key) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void GameContext::memo_insert(const std::string& key, bool duplicator_wins) {
  std::lock_guard<std::mutex> lock(mu_);
  if (memo_.size() >= memo_soft_cap) return;
  memo_.emplace(key, duplicator_wins);
}

std::size_t GameContext::memo_size() {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

namespace {

// Internal view: the structures never change during a game, only pins grow.
struct Pos {
  const Structure* left;
  const Structure* right;
  std::vector<std::pair<int, int>> pins;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> subs;
  int rounds = 0;
  Logic logic = Logic::FO;
};

const Structure& side_of(const Pos& p, int side) {
  return side == 0 ? *p.left : *p.right;
}

bool is_tree_vocab(const Pos& p) { return p.left->vocab() == Vocabulary::RootedTree; }

// Atomic type of vertex x relative to the pins, the root (tree vocabulary)
// and the pinned subsets, all on x's own side. Bit layout is identical for
// the two sides, so descriptors compare across sides.
std::uint64_t element_descriptor(const Pos& p, int side, int x) {
  const Structure& s = side_of(p, side);
  const bool tree = is_tree_vocab(p);
  int bit = 0;
  std::uint64_t d = 0;
  const auto push = [&](bool v) {
    if (bit >= 64) {
      throw std::invalid_argument("ef game: pin count exceeds descriptor capacity");
    }
    if (v) d |= std::uint64_t{1} << bit;
    ++bit;
  };
  for (const auto& pr : p.pins) {
    const int u = side == 0 ? pr.first : pr.second;
    push(x == u);
    if (tree) {
      push(s.parent_child(u, x));
      push(s.parent_child(x, u));
    } else {
      push(s.adjacent(x, u));
    }
  }
  if (tree) {
    const int r = s.root();
    push(x == r);
    push(s.parent_child(r, x));
    push(s.parent_child(x, r));
  }
  for (const auto& sb : p.subs) {
    const std::uint64_t mask = side == 0 ? sb.first : sb.second;
    push((mask >> x) & 1u);
  }
  return d;
}

// Partial-isomorphism condition over the current pins, including the
// implicit root constant and subset memberships.
bool pins_consistent(const Pos& p) {
  const Structure& a = *p.left;
  const Structure& b = *p.right;
  const bool tree = is_tree_vocab(p);
  for (std::size_t i = 0; i < p.pins.size(); ++i) {
    const auto [u, v] = p.pins[i];
    for (std::size_t j = 0; j < i; ++j) {
      const auto [u2, v2] = p.pins[j];
      if ((u == u2) != (v == v2)) return false;
      if (tree) {
        if (a.parent_child(u, u2) != b.parent_child(v, v2)) return false;
        if (a.parent_child(u2, u) != b.parent_child(v2, v)) return false;
      } else if (a.adjacent(u, u2) != b.adjacent(v, v2)) {
        return false;
      }
    }
    if (tree) {
      if ((u == a.root()) != (v == b.root())) return false;
      if (a.parent_child(a.root(), u) != b.parent_child(b.root(), v)) return false;
      if (a.parent_child(u, a.root()) != b.parent_child(v, b.root())) return false;
    }
    for (const auto& [mu, mv] : p.subs) {
      if (((mu >> u) & 1u) != ((mv >> v) & 1u)) return false;
    }
  }
  if (tree) {
    for (const auto& [mu, mv] : p.subs) {
      if (((mu >> a.root()) & 1u) != ((mv >> b.root()) & 1u)) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> descriptor_set(const Pos& p, int side) {
  std::vector<std::uint64_t> out;
  const int n = side_of(p, side).vertex_count();
  out.reserve(n);
  for (int x = 0; x < n; ++x) out.push_back(element_descriptor(p, side, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// One round left. A final subset probe is always answerable: Duplicator
// copies the forced memberships onto the counterpart pins and root, the
// rest of the reply is unconstrained. So the value is decided by element
// probes alone: Duplicator wins iff both sides realize the same set of
// element descriptors. Assumes the current pins are consistent.
bool last_round_value(const Pos& p) {
  return descriptor_set(p, 0) == descriptor_set(p, 1);
}

// Two rounds left, Spoiler considers a subset move. After (X, Y) the game
// reduces to descriptor-set equality where each descriptor gains one
// membership bit, so only the per-class choice in/out/split matters. Pinned
// vertices and the root sit in singleton classes with forced, matching
// replies. Spoiler profits exactly when some descriptor class has unequal
// sizes with the smaller side at most 1: he splits the bigger class (the
// other side cannot split) or occupies a class absent opposite.
bool subset_probe_survivable(const Pos& p) {
  std::unordered_map<std::uint64_t, std::pair<int, int>> counts;
  for (int x = 0; x < p.left->vertex_count(); ++x) counts[element_descriptor(p, 0, x)].first++;
  for (int y = 0; y < p.right->vertex_count(); ++y) counts[element_descriptor(p, 1, y)].second++;
  for (const auto& [d, c] : counts) {
    (void)d;
    if (c.first != c.second && (c.first < 2 || c.second < 2)) return false;
  }
  return true;
}

// Renaming by multi-source BFS: the root (tree vocabulary) and the pinned
// vertices seed the queue in pin order, neighbors are visited in ascending
// original index, unreached vertices keep their relative order at the end.
// Returns old index -> new index.
std::vector<int> bfs_rename(const Structure& s, const std::vector<int>& seeds) {
  const Graph& g = s.underlying();
  const int n = g.vertex_count();
  std::vector<int> newid(n, -1);
  std::vector<int> order;
  order.reserve(n);
  int next = 0;
  const auto visit = [&](int v) {
    if (newid[v] < 0) {
      newid[v] = next++;
      order.push_back(v);
    }
  };
  for (int v : seeds) visit(v);
  for (std::size_t h = 0; h < order.size(); ++h) {
    const int v = order[h];
    for (const int* it = g.neighbors_begin(v); it != g.neighbors_end(v); ++it) visit(*it);
  }
  for (int v = 0; v < n; ++v) visit(v);
  return newid;
}

void append_int(std::string& out, long long v) {
  out += std::to_string(v);
  out += ',';
}

void encode_side(std::string& out, const Structure& s, const std::vector<int>& newid) {
  const Graph& g = s.underlying();
  const int n = g.vertex_count();
  append_int(out, n);
  if (s.vocab() == Vocabulary::RootedTree) {
    const RootedTree& t = s.tree();
    std::vector<int> parent_new(n, -1);
    for (int v = 0; v < n; ++v) {
      if (v != t.root()) parent_new[newid[v]] = newid[t.parent(v)];
    }
    for (int i = 0; i < n; ++i) append_int(out, parent_new[i]);
  } else {
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) {
      es.emplace_back(std::min(newid[u], newid[v]), std::max(newid[u], newid[v]));
    }
    std::sort(es.begin(), es.end());
    for (const auto& [u, v] : es) {
      append_int(out, u);
      append_int(out, v);
    }
  }
  out += ';';
}

std::uint64_t rename_mask(std::uint64_t mask, const std::vector<int>& newid) {
  std::uint64_t out = 0;
  for (int v = 0; v < static_cast<int>(newid.size()); ++v) {
    if ((mask >> v) & 1u) out |= std::uint64_t{1} << newid[v];
  }
  return out;
}

// Normal form used as the memoization key. Renaming is an isomorphism that
// respects pins and the root, so equal keys imply game-equivalent
// positions; symmetric but unpinned parts are not collapsed.
std::string canonical_key(const Pos& p) {
  std::vector<int> seeds_l, seeds_r;
  if (is_tree_vocab(p)) {
    seeds_l.push_back(p.left->root());
    seeds_r.push_back(p.right->root());
  }
  for (const auto& [u, v] : p.pins) {
    seeds_l.push_back(u);
    seeds_r.push_back(v);
  }
  const std::vector<int> idl = bfs_rename(*p.left, seeds_l);
  const std::vector<int> idr = bfs_rename(*p.right, seeds_r);

  std::string key;
  key.reserve(64 + 4 * (idl.size() + idr.size()));
  key += is_tree_vocab(p) ? 't' : 'g';
  key += p.logic == Logic::MSO ? 'm' : 'f';
  append_int(key, p.rounds);
  encode_side(key, *p.left, idl);
  encode_side(key, *p.right, idr);
  for (const auto& [u, v] : p.pins) {
    append_int(key, idl[u]);
    append_int(key, idr[v]);
  }
  key += ';';
  for (const auto& [mu, mv] : p.subs) {
    append_int(key, static_cast<long long>(rename_mask(mu, idl)));
    append_int(key, static_cast<long long>(rename_mask(mv, idr)));
  }
  return key;
}

bool solve(const Pos& p, GameContext& ctx);

// Spoiler element moves on both sides; Duplicator answers opposite. At
// three or more remaining rounds replies are deduplicated by canonical
// successor key (lossless); at two the successors are evaluated by the
// last-round rule directly, which is cheaper than canonicalizing.
bool element_probes_survivable(const Pos& p, GameContext& ctx) {
  for (int side = 0; side < 2; ++side) {
    const Structure& s = side_of(p, side);
    const Structure& o = side_of(p, 1 - side);
    Pos child{p.left, p.right, p.pins, p.subs, p.rounds - 1, p.logic};
    child.pins.emplace_back(0, 0);
    for (int x = 0; x < s.vertex_count(); ++x) {
      bool answered = false;
      std::unordered_set<std::string> seen;
      for (int y = 0; y < o.vertex_count() && !answered; ++y) {
        child.pins.back() = side == 0 ? std::pair<int, int>{x, y} : std::pair<int, int>{y, x};
        if (p.rounds >= 3 && ctx.use_memo && !seen.insert(canonical_key(child)).second) {
          continue;
        }
        if (solve(child, ctx)) answered = true;
      }
      if (!answered) return false;
    }
  }
  return true;
}

// Raw subset enumeration for games with three or more remaining rounds.
bool deep_subset_probes_survivable(const Pos& p, GameContext& ctx) {
  for (int side = 0; side < 2; ++side) {
    const Structure& s = side_of(p, side);
    const Structure& o = side_of(p, 1 - side);
    if (s.vertex_count() > 20 || o.vertex_count() > 20) {
      throw std::invalid_argument(
          "ef game: subset enumeration beyond 20 vertices is infeasible at 3+ rounds");
    }
    const std::uint64_t total_x = std::uint64_t{1} << s.vertex_count();
    const std::uint64_t total_y = std::uint64_t{1} << o.vertex_count();
    Pos child{p.left, p.right, p.pins, p.subs, p.rounds - 1, p.logic};
    child.subs.emplace_back(0, 0);
    for (std::uint64_t x = 0; x < total_x; ++x) {
      bool answered = false;
      std::unordered_set<std::string> seen;
      for (std::uint64_t y = 0; y < total_y && !answered; ++y) {
        child.subs.back() = side == 0 ? std::pair<std::uint64_t, std::uint64_t>{x, y}
                                      : std::pair<std::uint64_t, std::uint64_t>{y, x};
        if (ctx.use_memo && !seen.insert(canonical_key(child)).second) continue;
        if (solve(child, ctx)) answered = true;
      }
      if (!answered) return false;
    }
  }
  return true;
}

bool compute_value(const Pos& p, GameContext& ctx) {
  if (!element_probes_survivable(p, ctx)) return false;
  if (p.logic == Logic::MSO) {
    if (p.rounds == 2) {
      if (!subset_probe_survivable(p)) return false;
    } else if (!deep_subset_probes_survivable(p, ctx)) {
      return false;
    }
  }
  return true;
}

// True when Duplicator wins. An inconsistent pin set can never recover
// (pins only accumulate), so it is a Spoiler win at any number of rounds.
bool solve(const Pos& p, GameContext& ctx) {
  if (!pins_consistent(p)) return false;
  if (p.rounds == 0) return true;
  if (p.rounds == 1) return last_round_value(p);
  std::string key;
  if (ctx.use_memo) {
    key = canonical_key(p);
    if (const auto hit = ctx.memo_lookup(key)) return *hit;
  }
  const bool value = compute_value(p, ctx);
  if (ctx.use_memo) ctx.memo_insert(key, value);
  return value;
}

// First winning Spoiler move in enumeration order: left elements ascending,
// left subset masks ascending, then the right side. Requires that Spoiler
// wins, at least one round remains, and the pins are consistent. A winning
// element move always exists at exactly one remaining round, so the subset
// scan is skipped there.
std::optional<SpoilerMove> find_witness(const Pos& p, GameContext& ctx) {
  for (int side = 0; side < 2; ++side) {
    const Structure& s = side_of(p, side);
    const Structure& o = side_of(p, 1 - side);
    Pos child{p.left, p.right, p.pins, p.subs, p.rounds - 1, p.logic};
    child.pins.emplace_back(0, 0);
    for (int x = 0; x < s.vertex_count(); ++x) {
      bool refuted = true;
      for (int y = 0; y < o.vertex_count() && refuted; ++y) {
        child.pins.back() = side == 0 ? std::pair<int, int>{x, y} : std::pair<int, int>{y, x};
        if (solve(child, ctx)) refuted = false;
      }
      if (refuted) return SpoilerMove{side, false, x, 0};
    }
  }
  if (p.logic != Logic::MSO || p.rounds < 2) return std::nullopt;
  for (int side = 0; side < 2; ++side) {
    const Structure& s = side_of(p, side);
    const Structure& o = side_of(p, 1 - side);
    if (s.vertex_count() > 20 || o.vertex_count() > 20) return std::nullopt;
    const std::uint64_t total_x = std::uint64_t{1} << s.vertex_count();
    const std::uint64_t total_y = std::uint64_t{1} << o.vertex_count();
    Pos child{p.left, p.right, p.pins, p.subs, p.rounds - 1, p.logic};
    child.subs.emplace_back(0, 0);
    for (std::uint64_t x = 0; x < total_x; ++x) {
      bool refuted = true;
      for (std::uint64_t y = 0; y < total_y && refuted; ++y) {
        child.subs.back() = side == 0 ? std::pair<std::uint64_t, std::uint64_t>{x, y}
                                      : std::pair<std::uint64_t, std::uint64_t>{y, x};
        if (solve(child, ctx)) refuted = false;
      }
      if (refuted) return SpoilerMove{side, true, -1, x};
    }
  }
  return std::nullopt;
}

Pos to_pos(const GamePosition& pos) {
  return Pos{&pos.left, &pos.right, pos.pinned_elements, pos.pinned_subsets,
             pos.rounds_left, pos.logic};
}

void validate_position(const GamePosition& pos, const GameLimits& limits) {
  if (pos.left.vocab() != pos.vocab || pos.right.vocab() != pos.vocab) {
    throw std::invalid_argument("ef game: position vocabulary does not match structures");
  }
  if (pos.rounds_left < 0) throw std::invalid_argument("ef game: negative rounds_left");
  const int nl = pos.left.vertex_count();
  const int nr = pos.right.vertex_count();
  const int limit =
      pos.logic == Logic::MSO ? limits.mso_max_vertices : limits.fo_max_vertices;
  if (nl > limit || nr > limit) {
    throw std::invalid_argument("ef game: structure exceeds the " +
                                to_string(pos.logic) + " size guard of " +
                                std::to_string(limit) + " vertices");
  }
  if ((pos.logic == Logic::MSO || !pos.pinned_subsets.empty()) && (nl > 64 || nr > 64)) {
    throw std::invalid_argument("ef game: subset masks support at most 64 vertices");
  }
  for (const auto& [u, v] : pos.pinned_elements) {
    if (u < 0 || u >= nl || v < 0 || v >= nr) {
      throw std::invalid_argument("ef game: pinned element out of range");
    }
  }
  for (const auto& [mu, mv] : pos.pinned_subsets) {
    if ((nl < 64 && (mu >> nl) != 0) || (nr < 64 && (mv >> nr) != 0)) {
      throw std::invalid_argument("ef game: subset mask out of range");
    }
  }
}

}  // namespace

GamePosition make_position(Structure left, Structure right, int rounds, Logic logic) {
  if (left.vocab() != right.vocab()) {
    throw std::invalid_argument("make_position: vocabularies differ");
  }
  GamePosition pos{std::move(left), std::move(right), {}, {}, rounds, logic,
                   Vocabulary::Graph};
  pos.vocab = pos.left.vocab();
  return pos;
}

bool final_check(const GamePosition& pos) {
  if (pos.rounds_left != 0) {
    throw std::invalid_argument("final_check: rounds_left must be 0");
  }
  validate_position(pos, GameLimits{1 << 30, 1 << 30});
  return pins_consistent(to_pos(pos));
}

GameOutcome game_value(const GamePosition& pos, GameContext& ctx) {
  validate_position(pos, ctx.limits);
  const Pos p = to_pos(pos);
  GameOutcome out;
  out.winner = solve(p, ctx) ? Player::Duplicator : Player::Spoiler;
  if (out.winner == Player::Spoiler && p.rounds >= 1 && pins_consistent(p)) {
    out.witness = find_witness(p, ctx);
  }
  return out;
}

GameOutcome game_value(const GamePosition& pos) {
  GameContext ctx;
  return game_value(pos, ctx);
}

bool equiv(const Structure& a, const Structure& b, int k, Logic logic, GameContext& ctx) {
  const GamePosition pos = make_position(a, b, k, logic);
  validate_position(pos, ctx.limits);
  return solve(to_pos(pos), ctx);
}

bool equiv(const Structure& a, const Structure& b, int k, Logic logic) {
  GameContext ctx;
  return equiv(a, b, k, logic, ctx);
}

bool equiv(const Graph& a, const Graph& b, int k, Logic logic) {
  return equiv(Structure(a), Structure(b), k, logic);
}

bool equiv(const RootedTree& a, const RootedTree& b, int k, Logic logic) {
  return equiv(Structure(a), Structure(b), k, logic);
}

std::vector<EquivClassId> classify(const std::vector<Structure>& structures, int k,
                                   Logic logic, GameContext& ctx) {
  std::vector<EquivClassId> ids(structures.size(), 0);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < structures.size(); ++i) {
    if (structures[i].vocab() != structures[0].vocab()) {
      throw std::invalid_argument("classify: mixed vocabularies");
    }
    EquivClassId id = -1;
    for (const std::size_t r : reps) {
      if (equiv(structures[r], structures[i], k, logic, ctx)) {
        id = static_cast<EquivClassId>(r);
        break;
      }
    }
    if (id < 0) {
      id = static_cast<EquivClassId>(i);
      reps.push_back(i);
    }
    ids[i] = id;
  }
  return ids;
}

std::vector<EquivClassId> classify(const std::vector<Structure>& structures, int k,
                                   Logic logic) {
  GameContext ctx;
  return classify(structures, k, logic, ctx);
}

bool pinned_equiv(const PinnedStructure& a, const PinnedStructure& b, int k,
                  Logic logic, GameContext& ctx) {
  if (a.pinned_elements.size() != b.pinned_elements.size()) return false;
  if (a.pinned_subsets.size() != b.pinned_subsets.size()) return false;
  GamePosition pos = make_position(a.structure, b.structure, k, logic);
  for (std::size_t i = 0; i < a.pinned_elements.size(); ++i) {
    pos.pinned_elements.emplace_back(a.pinned_elements[i], b.pinned_elements[i]);
  }
  for (std::size_t i = 0; i < a.pinned_subsets.size(); ++i) {
    pos.pinned_subsets.emplace_back(a.pinned_subsets[i], b.pinned_subsets[i]);
  }
  validate_position(pos, ctx.limits);
  return solve(to_pos(pos), ctx);
}

EquivClassId ehrenfeucht_value(const PinnedStructure& target,
                               const std::vector<PinnedStructure>& pool, int k,
                               Logic logic, GameContext& ctx) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    bool matched = false;
    for (const std::size_t r : reps) {
      if (pinned_equiv(pool[r], pool[i], k, logic, ctx)) {
        matched = true;
        break;
      }
    }
    if (!matched) reps.push_back(i);
  }
  for (const std::size_t r : reps) {
    if (pinned_equiv(pool[r], target, k, logic, ctx)) {
      return static_cast<EquivClassId>(r);
    }
  }
  return static_cast<EquivClassId>(pool.size());
}

}  // namespace eflab
