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

#include "eflab/constructions.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "eflab/metrics.hpp"
#include "eflab/structure.hpp"

namespace eflab {

TreeCatalog enumerate_trees(int max_order) {
  if (max_order < 0 || max_order > 12) {
    throw std::invalid_argument("enumerate_trees: max_order " +
                                std::to_string(max_order) +
                                " outside guard [0, 12]");
  }
  TreeCatalog catalog;
  catalog.max_order = max_order;

  std::map<CanonicalCode, Graph> by_code;
  std::vector<Graph> current;
  if (max_order >= 1) {
    Graph single(1, {});
    by_code.emplace(tree_canonical_code(single), single);
    current.push_back(single);
  }
  for (int order = 2; order <= max_order; ++order) {
    std::map<CanonicalCode, Graph> next;
    for (const Graph& t : current) {
      for (int attach = 0; attach < t.vertex_count(); ++attach) {
        std::vector<std::pair<int, int>> edges = t.edges();
        edges.emplace_back(attach, t.vertex_count());
        Graph grown(t.vertex_count() + 1, edges);
        CanonicalCode code = tree_canonical_code(grown);
        next.emplace(std::move(code), std::move(grown));
      }
    }
    current.clear();
    for (auto& [code, tree] : next) current.push_back(tree);
    by_code.merge(next);
  }

  catalog.trees.reserve(by_code.size());
  for (auto& [code, tree] : by_code) catalog.trees.push_back(std::move(tree));
  return catalog;
}

Forest build_T0(int l, int a, T0Variant variant) {
  if (l < 1) throw std::invalid_argument("build_T0: l must be >= 1");
  if (a < 0) throw std::invalid_argument("build_T0: a must be >= 0");
  const int max_order = variant == T0Variant::kUpToLPlusOne ? l + 1 : l;
  const TreeCatalog catalog = enumerate_trees(max_order);
  Forest forest;
  forest.trees.reserve(catalog.trees.size() * static_cast<std::size_t>(a));
  for (const Graph& tree : catalog.trees) {
    for (int copy = 0; copy < a; ++copy) forest.trees.push_back(tree);
  }
  return forest;
}

namespace {

// Subtree code and height per vertex, bottom up. Codes use the same nested
// parenthesis shape as rooted_canonical_code, so equal codes mean rooted
// isomorphism.
void fill_codes(const RootedTree& rt, std::vector<std::string>& code,
                std::vector<int>& height) {
  const int n = rt.vertex_count();
  code.assign(n, {});
  height.assign(n, 0);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack{rt.root()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const int c : rt.children(v)) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<std::string> kids;
    int h = 0;
    for (const int c : rt.children(v)) {
      kids.push_back(code[c]);
      h = std::max(h, height[c] + 1);
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const std::string& kid : kids) s += kid;
    s += ")";
    code[v] = std::move(s);
    height[v] = h;
  }
}

bool rooted_diverging(const RootedTree& rt,
                      const std::vector<std::string>& code) {
  for (int v = 0; v < rt.vertex_count(); ++v) {
    std::vector<std::string> kids;
    for (const int c : rt.children(v)) kids.push_back(code[c]);
    std::sort(kids.begin(), kids.end());
    if (std::adjacent_find(kids.begin(), kids.end()) != kids.end()) {
      return false;
    }
  }
  return true;
}

int tree_radius(const Graph& tree) {
  const int center = tree_centers(tree).front();
  int radius = 0;
  for (const Distance& d : bfs_distances(tree, center)) {
    radius = std::max(radius, d.value());
  }
  return radius;
}

int tree_diameter(const Graph& tree) {
  if (tree.vertex_count() == 0) return 0;
  const auto farthest = [&tree](int from) {
    int vertex = from;
    int best = 0;
    const auto dist = bfs_distances(tree, from);
    for (int v = 0; v < tree.vertex_count(); ++v) {
      if (dist[v] && *dist[v] > best) {
        best = *dist[v];
        vertex = v;
      }
    }
    return std::pair<int, int>{vertex, best};
  };
  return farthest(farthest(0).first).second;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

// T(1)=2, T(s)=2^T(s-1); saturates once the value leaves 63 bits.
long long tower_capped(int s) {
  long long value = 2;
  for (int step = 2; step <= s; ++step) {
    if (value >= 63) return std::numeric_limits<long long>::max();
    value = 1LL << value;
  }
  return value;
}

std::optional<Graph> grow_diverging(const Graph& t, int order,
                                    int radius_target,
                                    std::set<CanonicalCode>& seen) {
  if (t.vertex_count() == order) return t;
  for (int attach = 0; attach < t.vertex_count(); ++attach) {
    std::vector<std::pair<int, int>> edges = t.edges();
    edges.emplace_back(attach, t.vertex_count());
    Graph cand(t.vertex_count() + 1, std::move(edges));
    if (tree_radius(cand) != radius_target || !is_diverging(cand)) continue;
    if (!seen.insert(tree_canonical_code(cand)).second) continue;
    if (auto found = grow_diverging(cand, order, radius_target, seen)) {
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_diverging(const Graph& t) {
  if (!is_tree(t)) {
    throw std::invalid_argument("is_diverging: input is not a tree");
  }
  if (t.vertex_count() <= 1) return true;
  for (const int center : tree_centers(t)) {
    const RootedTree rt = RootedTree::from_tree(t, center);
    std::vector<std::string> code;
    std::vector<int> height;
    fill_codes(rt, code, height);
    if (!rooted_diverging(rt, code)) return false;
  }
  return true;
}

Graph build_diverging_tree(int order, int i) {
  if (i < 3) {
    throw std::invalid_argument("build_diverging_tree: i must be >= 3");
  }
  const long long lower = 2LL * i + 2;
  long long upper = tower_capped(i - 1);
  upper = upper > (std::numeric_limits<long long>::max() - 1) / 2
              ? std::numeric_limits<long long>::max()
              : 2 * upper + 1;
  if (order < lower || order > upper) {
    throw std::invalid_argument(
        "build_diverging_tree: order " + std::to_string(order) +
        " outside [2i+2, 2T(i-1)+1] = [" + std::to_string(lower) + ", " +
        std::to_string(upper) + "]");
  }
  if (order > 32) {
    throw std::invalid_argument(
        "build_diverging_tree: order beyond the practical guard 32");
  }

  const int radius_target = i + 1;
  const Graph seed = path_graph(2 * i + 2);
  std::set<CanonicalCode> seen;
  if (auto found = grow_diverging(seed, order, radius_target, seen)) {
    return *found;
  }
  if (order <= 12) {
    for (const Graph& t : enumerate_trees(order).trees) {
      if (t.vertex_count() == order && tree_radius(t) == radius_target &&
          is_diverging(t)) {
        return t;
      }
    }
  }
  throw std::runtime_error(
      "build_diverging_tree: no diverging tree of order " +
      std::to_string(order) + " and radius " + std::to_string(radius_target) +
      " found after exploring " + std::to_string(seen.size()) +
      " intermediate shapes");
}

namespace {

// Depth-first rebuild over the kept vertices only, renumbering in preorder.
// When graft_parent >= 0, graft_child is appended to its child list: this is
// how a path collapse reattaches the lower subtree.
RootedTree rebuild_tree(const RootedTree& t, const std::vector<char>& keep,
                        int new_root, int graft_parent, int graft_child) {
  std::vector<int> order;
  std::vector<int> old_parent_of;
  std::vector<std::pair<int, int>> stack{{new_root, -1}};
  while (!stack.empty()) {
    const auto [v, parent_old] = stack.back();
    stack.pop_back();
    order.push_back(v);
    old_parent_of.push_back(parent_old);
    std::vector<int> next;
    for (const int c : t.children(v)) {
      if (keep[c]) next.push_back(c);
    }
    if (v == graft_parent) next.push_back(graft_child);
    for (auto it = next.rbegin(); it != next.rend(); ++it) {
      stack.emplace_back(*it, v);
    }
  }
  std::vector<int> new_id(t.vertex_count(), -1);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    new_id[order[idx]] = static_cast<int>(idx);
  }
  std::vector<int> parent(order.size(), -1);
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    parent[idx] = new_id[old_parent_of[idx]];
  }
  return RootedTree(static_cast<int>(order.size()), 0, std::move(parent));
}

RootedTree prune_siblings(const RootedTree& t, int k, Logic logic,
                          long long z, GameContext& ctx, bool& changed) {
  std::vector<char> keep(t.vertex_count(), 1);
  bool any = false;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (!keep[v]) continue;
    const auto& ch = t.children(v);
    if (static_cast<long long>(ch.size()) <= z) continue;
    std::vector<Structure> subs;
    subs.reserve(ch.size());
    for (const int c : ch) subs.emplace_back(t.subtree(c));
    const std::vector<EquivClassId> cls = classify(subs, k, logic, ctx);
    std::map<EquivClassId, long long> kept_in_group;
    for (std::size_t idx = 0; idx < ch.size(); ++idx) {
      long long& count = kept_in_group[cls[idx]];
      if (count >= z) {
        for (const int u : t.subtree_vertices(ch[idx])) keep[u] = 0;
        any = true;
      } else {
        ++count;
      }
    }
  }
  if (!any) return t;
  changed = true;
  return rebuild_tree(t, keep, t.root(), -1, -1);
}

RootedTree collapse_one_path(const RootedTree& t, int k, Logic logic,
                             GameContext& ctx, bool& changed) {
  for (int w1 = 0; w1 < t.vertex_count(); ++w1) {
    const std::vector<int> below = t.subtree_vertices(w1);
    const Structure upper(t.subtree(w1));
    for (const int w2 : below) {
      if (w2 == w1) continue;
      if (!equiv(upper, Structure(t.subtree(w2)), k, logic, ctx)) continue;
      changed = true;
      if (w1 == t.root()) return t.subtree(w2);
      std::vector<char> keep(t.vertex_count(), 1);
      for (const int u : below) keep[u] = 0;
      for (const int u : t.subtree_vertices(w2)) keep[u] = 1;
      keep[w2] = 0;  // grafted explicitly, not reached via its old parent
      return rebuild_tree(t, keep, t.root(), t.parent(w1), w2);
    }
  }
  return t;
}

GameLimits limits_for_vertices(int n) {
  GameLimits limits;
  limits.fo_max_vertices = std::max(limits.fo_max_vertices, n);
  limits.mso_max_vertices = std::max(limits.mso_max_vertices, n);
  return limits;
}

}  // namespace

ReductionResult reduce_tree(const RootedTree& t, int k, Logic logic,
                            const ReductionBudget& budget, bool verify) {
  if (k < 0) throw std::invalid_argument("reduce_tree: k must be >= 0");
  if (budget.z < 1) {
    throw std::invalid_argument("reduce_tree: budget.z must be >= 1");
  }
  if (verify && k > 2) {
    throw std::invalid_argument(
        "reduce_tree: verified mode supports k <= 2 only");
  }
  if (verify && t.vertex_count() > 32) {
    throw std::invalid_argument(
        "reduce_tree: verified mode guarded to 32 vertices");
  }

  GameContext ctx(limits_for_vertices(t.vertex_count()));
  RootedTree current = t;
  int passes = 0;
  while (true) {
    ++passes;
    bool pass_changed = false;
    current = prune_siblings(current, k, logic, budget.z, ctx, pass_changed);
    current = collapse_one_path(current, k, logic, ctx, pass_changed);
    if (!pass_changed) break;
  }

  ReductionResult result{current, false, passes};
  if (verify) {
    if (!equiv(Structure(t), Structure(current), k, logic, ctx)) {
      throw std::runtime_error(
          "reduce_tree: reduced tree is not k-equivalent to the input; the "
          "z cap is below the safe threshold for this k and logic");
    }
    result.verified = true;
  }
  return result;
}

int StrategyTranscript::rounds_played() const {
  int count = 0;
  for (const TranscriptRound& r : rounds) {
    count += r.mover == Player::Spoiler ? 1 : 0;
  }
  return count;
}

namespace {

// ---- scripted playout machinery ----
//
// Spoiler's moves are fixed by the case analysis; Duplicator's replies are
// enumerated exhaustively. A reply that breaks the pinned pattern ends its
// branch in Spoiler's favor; the played-out value is Spoiler only when every
// branch ends that way within the round budget.

struct PlayCtx {
  const Graph& a;
  const Graph& b;
  int k;
};

using Pins = std::vector<std::pair<int, int>>;

struct WalkResult {
  bool spoiler_wins = false;
  int worst_rounds = 0;
  std::vector<TranscriptRound> line;
};

bool pin_consistent(const PlayCtx& ctx, const Pins& pins,
                    std::pair<int, int> np) {
  for (const auto& [x, y] : pins) {
    if ((np.first == x) != (np.second == y)) return false;
    if (ctx.a.has_edge(np.first, x) != ctx.b.has_edge(np.second, y)) {
      return false;
    }
  }
  return true;
}

// Plays one scripted Spoiler move and folds the walk results over every
// Duplicator reply. cont(rounds_used) evaluates the position after a
// consistent reply (the new pin is pins.back()).
template <typename Cont>
WalkResult expand(PlayCtx& ctx, Pins& pins, int rounds_used, int side,
                  int vertex, const char* phase, std::string annotation,
                  Cont&& cont) {
  WalkResult out;
  if (rounds_used >= ctx.k) {
    out.spoiler_wins = false;  // no round left for the scripted move
    out.worst_rounds = rounds_used;
    return out;
  }
  const TranscriptRound spoiler{Player::Spoiler, side,  false,
                                vertex,          phase, std::move(annotation)};
  const Graph& opposite = side == 0 ? ctx.b : ctx.a;
  WalkResult best;
  bool have_branch = false;
  for (int reply = 0; reply < opposite.vertex_count(); ++reply) {
    const std::pair<int, int> pin = side == 0
                                        ? std::pair<int, int>{vertex, reply}
                                        : std::pair<int, int>{reply, vertex};
    TranscriptRound dup{Player::Duplicator, 1 - side, false, reply, phase, ""};
    WalkResult branch;
    if (!pin_consistent(ctx, pins, pin)) {
      dup.annotation = "reply breaks the pinned pattern";
      branch.spoiler_wins = true;
      branch.worst_rounds = rounds_used + 1;
      branch.line = {spoiler, dup};
    } else {
      pins.push_back(pin);
      branch = cont(rounds_used + 1);
      pins.pop_back();
      branch.line.insert(branch.line.begin(), {spoiler, dup});
    }
    if (!branch.spoiler_wins) return branch;  // surviving Duplicator line
    if (!have_branch || branch.worst_rounds > best.worst_rounds) {
      best = std::move(branch);
      have_branch = true;
    }
  }
  if (!have_branch) {  // opposite structure is empty: no reply exists
    best.spoiler_wins = true;
    best.worst_rounds = rounds_used + 1;
    best.line = {spoiler};
  }
  return best;
}

// A component rooted at a chosen vertex, with global-id translation and
// per-vertex subtree codes and heights.
struct RootedView {
  Component comp;
  RootedTree tree;
  std::vector<int> local;  // global -> local, -1 outside the component
  std::vector<std::string> code;
  std::vector<int> height;
};

RootedView make_view(const Graph& whole, const Component& comp,
                     int root_global) {
  RootedView view;
  view.comp = comp;
  view.local.assign(whole.vertex_count(), -1);
  int root_local = -1;
  for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
    view.local[comp.vertices[i]] = static_cast<int>(i);
    if (comp.vertices[i] == root_global) root_local = static_cast<int>(i);
  }
  view.tree = RootedTree::from_tree(comp.graph, root_local);
  fill_codes(view.tree, view.code, view.height);
  return view;
}

WalkResult walk_distance(PlayCtx& ctx, Pins& pins, int rounds_used,
                         std::size_t pi, std::size_t pj);
WalkResult walk_scan_distance(PlayCtx& ctx, Pins& pins, int rounds_used);
WalkResult walk_descent(PlayCtx& ctx, const RootedView& va,
                        const RootedView& vb, Pins& pins, int rounds_used,
                        int al, int bl);
WalkResult walk_prolong(PlayCtx& ctx, const RootedView& va,
                        const RootedView& vb, Pins& pins, int rounds_used,
                        int al, int bl);
WalkResult walk_path(PlayCtx& ctx, const RootedView& va, const RootedView& vb,
                     Pins& pins, int rounds_used,
                     const std::vector<int>& targets, std::size_t idx,
                     int a_end, int z2);

// Min distance of a mismatched pin pair; empty when the distances agree.
std::optional<int> pair_discrepancy(const PlayCtx& ctx, const Pins& pins,
                                    std::size_t i, std::size_t j) {
  const Distance da = graph_distance(ctx.a, pins[i].first, pins[j].first);
  const Distance db = graph_distance(ctx.b, pins[i].second, pins[j].second);
  if (da == db) return std::nullopt;
  int smaller = INT_MAX;
  if (da) smaller = std::min(smaller, *da);
  if (db) smaller = std::min(smaller, *db);
  return smaller;
}

// Midpoint halving on the pinned pair (pi, pj) whose distances differ.
WalkResult walk_distance(PlayCtx& ctx, Pins& pins, int rounds_used,
                         std::size_t pi, std::size_t pj) {
  const Distance da = graph_distance(ctx.a, pins[pi].first, pins[pj].first);
  const Distance db = graph_distance(ctx.b, pins[pi].second, pins[pj].second);
  if (da == db) {
    throw std::logic_error("halving: pair distances agree, unanticipated");
  }
  int side;
  int span;
  if (da && (!db || *da < *db)) {
    side = 0;
    span = *da;
  } else {
    side = 1;
    span = *db;
  }
  if (span <= 1) {
    throw std::logic_error(
        "halving: discrepancy below 2 should already be inconsistent");
  }
  const Graph& g = side == 0 ? ctx.a : ctx.b;
  const int u = side == 0 ? pins[pi].first : pins[pi].second;
  const int v = side == 0 ? pins[pj].first : pins[pj].second;
  const std::vector<int> path = shortest_path(g, u, v);
  const int mid = path[(span + 1) / 2];
  return expand(
      ctx, pins, rounds_used, side, mid, "distance-doubling",
      "midpoint of the mismatched pair", [&](int r) -> WalkResult {
        const std::size_t np = pins.size() - 1;
        const auto first = pair_discrepancy(ctx, pins, pi, np);
        const auto second = pair_discrepancy(ctx, pins, np, pj);
        if (!first && !second) {
          throw std::logic_error(
              "halving: midpoint produced no new mismatch, unanticipated");
        }
        if (first && (!second || *first <= *second)) {
          return walk_distance(ctx, pins, r, pi, np);
        }
        return walk_distance(ctx, pins, r, np, pj);
      });
}

// Halving entry without a designated pair: picks the mismatched pair with the
// smallest finite distance.
WalkResult walk_scan_distance(PlayCtx& ctx, Pins& pins, int rounds_used) {
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  int best = INT_MAX;
  for (std::size_t i = 0; i < pins.size(); ++i) {
    for (std::size_t j = i + 1; j < pins.size(); ++j) {
      const auto d = pair_discrepancy(ctx, pins, i, j);
      if (d && *d < best) {
        best = *d;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best == INT_MAX) {
    throw std::logic_error(
        "stretch: no pinned distance mismatch, unanticipated");
  }
  return walk_distance(ctx, pins, rounds_used, best_i, best_j);
}

// Descent through two diverging subtrees whose path ends carry
// non-isomorphic subtrees; each round pins a branch with no isomorphic
// counterpart opposite.
WalkResult walk_descent(PlayCtx& ctx, const RootedView& va,
                        const RootedView& vb, Pins& pins, int rounds_used,
                        int al, int bl) {
  const std::vector<int>& ca = va.tree.children(al);
  const std::vector<int>& cb = vb.tree.children(bl);
  if (ca.empty() && cb.empty()) {
    throw std::logic_error(
        "descent: both path ends are leaves with equal history, "
        "unanticipated");
  }
  if (ca.empty() || cb.empty()) {
    const bool a_is_leaf = ca.empty();
    const int child = a_is_leaf ? cb.front() : ca.front();
    const int side = a_is_leaf ? 1 : 0;
    const int global =
        a_is_leaf ? vb.comp.vertices[child] : va.comp.vertices[child];
    return expand(ctx, pins, rounds_used, side, global, "branch-descent",
                  "opposite path end is a leaf", [&](int) -> WalkResult {
                    throw std::logic_error(
                        "descent: consistent reply below a leaf, "
                        "unanticipated");
                  });
  }

  const auto unmatched = [](const RootedView& vx, const std::vector<int>& cx,
                            const RootedView& vy, const std::vector<int>& cy) {
    for (const int c : cx) {
      bool matched = false;
      for (const int d : cy) {
        if (vx.code[c] == vy.code[d]) {
          matched = true;
          break;
        }
      }
      if (!matched) return c;
    }
    return -1;
  };

  const int pick_a = unmatched(va, ca, vb, cb);
  if (pick_a >= 0) {
    return expand(ctx, pins, rounds_used, 0, va.comp.vertices[pick_a],
                  "branch-descent",
                  "descend left: no opposite branch matches",
                  [&](int r) -> WalkResult {
                    const int reply = vb.local[pins.back().second];
                    if (reply < 0 || vb.tree.parent(reply) != bl) {
                      throw std::logic_error(
                          "descent: consistent reply is not a child of the "
                          "path end, unanticipated");
                    }
                    return walk_descent(ctx, va, vb, pins, r, pick_a, reply);
                  });
  }
  const int pick_b = unmatched(vb, cb, va, ca);
  if (pick_b >= 0) {
    return expand(ctx, pins, rounds_used, 1, vb.comp.vertices[pick_b],
                  "branch-descent",
                  "descend right: no opposite branch matches "
                  "(symmetric option applied)",
                  [&](int r) -> WalkResult {
                    const int reply = va.local[pins.back().first];
                    if (reply < 0 || va.tree.parent(reply) != al) {
                      throw std::logic_error(
                          "descent: consistent reply is not a child of the "
                          "path end, unanticipated");
                    }
                    return walk_descent(ctx, va, vb, pins, r, reply, pick_b);
                  });
  }
  throw std::logic_error(
      "descent: all branches match in both directions, which contradicts "
      "non-isomorphic diverging subtrees, unanticipated");
}

// Path ends carry subtrees of different heights: walk down the deeper one
// until the shallower side runs out of children.
WalkResult walk_prolong(PlayCtx& ctx, const RootedView& va,
                        const RootedView& vb, Pins& pins, int rounds_used,
                        int al, int bl) {
  const int ha = va.height[al];
  const int hb = vb.height[bl];
  if (ha == hb) {
    throw std::logic_error("prolong: subtree heights agree, unanticipated");
  }
  const bool deep_a = ha > hb;
  const RootedView& deep = deep_a ? va : vb;
  const int deep_end = deep_a ? al : bl;
  int child = -1;
  for (const int c : deep.tree.children(deep_end)) {
    if (child < 0 || deep.height[c] > deep.height[child]) child = c;
  }
  return expand(ctx, pins, rounds_used, deep_a ? 0 : 1,
                deep.comp.vertices[child], "path-selection",
                "prolong the deeper subtree", [&](int r) -> WalkResult {
                  const RootedView& shallow = deep_a ? vb : va;
                  const int shallow_end = deep_a ? bl : al;
                  const int reply =
                      deep_a ? shallow.local[pins.back().second]
                             : shallow.local[pins.back().first];
                  if (reply < 0 || shallow.tree.parent(reply) != shallow_end) {
                    throw std::logic_error(
                        "prolong: consistent reply is not a child of the "
                        "shallow end, unanticipated");
                  }
                  return deep_a ? walk_prolong(ctx, va, vb, pins, r, child,
                                               reply)
                                : walk_prolong(ctx, va, vb, pins, r, reply,
                                               child);
                });
}

// Walks the scripted vertices of B down to a duplicated branch root z1, then
// dispatches on the subtree comparison at the far end (possibly switching to
// the duplicate z2).
WalkResult walk_path(PlayCtx& ctx, const RootedView& va, const RootedView& vb,
                     Pins& pins, int rounds_used,
                     const std::vector<int>& targets, std::size_t idx,
                     int a_end, int z2) {
  const int target = targets[idx];
  const bool last = idx + 1 == targets.size();
  return expand(
      ctx, pins, rounds_used, 1, vb.comp.vertices[target], "path-selection",
      last ? "end of the selected path: first duplicate branch"
           : "walk the selected path",
      [&](int r) -> WalkResult {
        const int reply = va.local[pins.back().first];
        if (reply < 0 || va.tree.parent(reply) != a_end) {
          throw std::logic_error(
              "path walk: consistent reply is not a child of the previous "
              "reply, unanticipated");
        }
        if (!last) {
          return walk_path(ctx, va, vb, pins, r, targets, idx + 1, reply, z2);
        }
        const int z1 = target;
        if (va.height[reply] != vb.height[z1]) {
          return walk_prolong(ctx, va, vb, pins, r, reply, z1);
        }
        if (va.code[reply] != vb.code[z1]) {
          return walk_descent(ctx, va, vb, pins, r, reply, z1);
        }
        // Isomorphic path subtrees: switch to the duplicate branch.
        return expand(
            ctx, pins, r, 1, vb.comp.vertices[z2], "path-selection",
            "switch to the duplicate branch", [&](int r2) -> WalkResult {
              const int sibling = va.local[pins.back().first];
              if (sibling < 0 || va.tree.parent(sibling) != a_end ||
                  sibling == reply) {
                throw std::logic_error(
                    "duplicate-branch switch: consistent reply is not a "
                    "fresh sibling, unanticipated");
              }
              return walk_descent(ctx, va, vb, pins, r2, sibling, z2);
            });
      });
}

std::vector<int> diametral_path(const Graph& tree) {
  const auto farthest = [&tree](int from) {
    int vertex = from;
    int best = -1;
    const auto dist = bfs_distances(tree, from);
    for (int v = 0; v < tree.vertex_count(); ++v) {
      if (dist[v] && *dist[v] > best) {
        best = *dist[v];
        vertex = v;
      }
    }
    return vertex;
  };
  const int a = farthest(0);
  const int b = farthest(a);
  return shortest_path(tree, a, b);
}

// Component diameters differ: pin one or two probe vertices in the larger
// component so that some pinned pair sits at distance d_small + 1, which no
// consistent reply pattern can reproduce opposite.
WalkResult walk_stretch(PlayCtx& ctx, Pins& pins, int rounds_used,
                        int big_side, const Component& big, int root_global,
                        int d_small, bool degenerate) {
  const Graph& bg = big.graph;
  int root_local = -1;
  for (std::size_t i = 0; i < big.vertices.size(); ++i) {
    if (big.vertices[i] == root_global) root_local = static_cast<int>(i);
  }
  const std::string note =
      degenerate ? "opposite component is a single vertex (flagged); " : "";
  const auto from_root = bfs_distances(bg, root_local);
  for (int v = 0; v < bg.vertex_count(); ++v) {
    if (from_root[v] && *from_root[v] == d_small + 1) {
      return expand(ctx, pins, rounds_used, big_side, big.vertices[v],
                    "distance-doubling",
                    note + "probe at distance d+1 from the pinned center",
                    [&](int r) { return walk_scan_distance(ctx, pins, r); });
    }
  }
  // The pinned center sees no vertex at d_small + 1; take a stretch of a
  // diametral path instead. The closest path vertex is within reach because
  // the center's eccentricity is at most d_small here.
  const std::vector<int> path = diametral_path(bg);
  int closest = 0;
  int closest_dist = INT_MAX;
  for (std::size_t idx = 0; idx < path.size(); ++idx) {
    const int d = from_root[path[idx]].value();
    if (d < closest_dist) {
      closest_dist = d;
      closest = static_cast<int>(idx);
    }
  }
  const int start =
      std::min(closest, static_cast<int>(path.size()) - 1 - (d_small + 1));
  const int p = path[start];
  const int q = path[start + d_small + 1];
  return expand(
      ctx, pins, rounds_used, big_side, big.vertices[p], "distance-doubling",
      note + "first stretch probe", [&](int r1) {
        return expand(ctx, pins, r1, big_side, big.vertices[q],
                      "distance-doubling",
                      "second stretch probe at distance d+1 from the first",
                      [&](int r2) { return walk_scan_distance(ctx, pins, r2); });
      });
}

StrategyTranscript make_transcript(const WalkResult& walk) {
  StrategyTranscript transcript;
  transcript.rounds = walk.line;
  transcript.outcome = GameOutcome{
      walk.spoiler_wins ? Player::Spoiler : Player::Duplicator, std::nullopt};
  for (const TranscriptRound& r : transcript.rounds) {
    if (!r.phase.empty() &&
        (transcript.phases.empty() || transcript.phases.back() != r.phase)) {
      transcript.phases.push_back(r.phase);
    }
  }
  return transcript;
}

// True when the pattern tree embeds into some component of the host forest
// as a subgraph. Rooted embedding with child matching; the pattern root is
// tried against every host vertex, which is complete because a subgraph copy
// maps the pattern rooted anywhere onto the host rooted at the image.
bool rooted_embeds(const RootedTree& pat, int pv, const RootedTree& host,
                   int hv, std::vector<signed char>& memo) {
  signed char& slot = memo[pv * host.vertex_count() + hv];
  if (slot != -1) return slot != 0;
  const std::vector<int>& pc = pat.children(pv);
  const std::vector<int>& hc = host.children(hv);
  bool ok = pc.size() <= hc.size();
  if (ok && !pc.empty()) {
    // bipartite matching: pattern children into distinct host children
    std::vector<std::vector<char>> edge(pc.size(),
                                        std::vector<char>(hc.size(), 0));
    for (std::size_t i = 0; i < pc.size(); ++i) {
      for (std::size_t j = 0; j < hc.size(); ++j) {
        edge[i][j] =
            rooted_embeds(pat, pc[i], host, hc[j], memo) ? 1 : 0;
      }
    }
    std::vector<int> match_of(hc.size(), -1);
    const auto augment = [&](auto&& self, std::size_t i,
                             std::vector<char>& used) -> bool {
      for (std::size_t j = 0; j < hc.size(); ++j) {
        if (!edge[i][j] || used[j]) continue;
        used[j] = 1;
        if (match_of[j] < 0 ||
            self(self, static_cast<std::size_t>(match_of[j]), used)) {
          match_of[j] = static_cast<int>(i);
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; ok && i < pc.size(); ++i) {
      std::vector<char> used(hc.size(), 0);
      ok = augment(augment, i, used);
    }
  }
  slot = ok ? 1 : 0;
  return ok;
}

bool forest_contains_tree(const Graph& host_forest, const Graph& pattern) {
  if (pattern.vertex_count() == 0) return true;
  if (pattern.vertex_count() == 1) return host_forest.vertex_count() >= 1;
  const RootedTree pat = RootedTree::from_tree(pattern, 0);
  for (const Component& comp : components(host_forest)) {
    if (comp.graph.vertex_count() < pattern.vertex_count()) continue;
    for (int root = 0; root < comp.graph.vertex_count(); ++root) {
      const RootedTree host = RootedTree::from_tree(comp.graph, root);
      std::vector<signed char> memo(
          static_cast<std::size_t>(pat.vertex_count()) * host.vertex_count(),
          -1);
      if (rooted_embeds(pat, pat.root(), host, host.root(), memo)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

StrategyTranscript spoiler_play(const Forest& a, const Forest& b,
                                const Graph& s, int k) {
  const Graph ga = a.to_graph();
  const Graph gb = b.to_graph();
  if (k < 3 || k > 6) {
    throw std::invalid_argument("spoiler_play: k must be in [3, 6]");
  }
  if (ga.vertex_count() > 16 || gb.vertex_count() > 16) {
    throw std::invalid_argument(
        "spoiler_play: forests guarded to 16 vertices each");
  }
  if (!is_tree(s)) {
    throw std::invalid_argument("spoiler_play: S must be a tree");
  }
  if (!is_diverging(s)) {
    throw std::invalid_argument("spoiler_play: S must be diverging");
  }
  const int s_radius = tree_radius(s);
  if (s_radius < 1 || s_radius > k - 2) {
    throw std::invalid_argument(
        "spoiler_play: radius of S must lie in [1, k-2]");
  }

  const std::vector<Component> comps_a = components(ga);
  int sa_index = -1;
  for (std::size_t i = 0; i < comps_a.size(); ++i) {
    if (comps_a[i].graph.vertex_count() == s.vertex_count() &&
        trees_isomorphic(comps_a[i].graph, s)) {
      sa_index = static_cast<int>(i);
      break;
    }
  }
  if (sa_index < 0) {
    throw std::invalid_argument(
        "spoiler_play: A has no component isomorphic to S");
  }
  if (forest_contains_tree(gb, s)) {
    throw std::invalid_argument("spoiler_play: B contains a copy of S");
  }

  const Component& sa = comps_a[sa_index];
  const int x1 =
      sa.vertices[tree_centers(sa.graph).front()];  // smallest central vertex
  const int diam_a = tree_diameter(sa.graph);
  const RootedView view_a = make_view(ga, sa, x1);

  const std::vector<Component> comps_b = components(gb);
  std::vector<int> comp_of_b(gb.vertex_count(), -1);
  for (std::size_t ci = 0; ci < comps_b.size(); ++ci) {
    for (const int v : comps_b[ci].vertices) {
      comp_of_b[v] = static_cast<int>(ci);
    }
  }

  PlayCtx ctx{ga, gb, k};
  Pins pins;
  const WalkResult walk = expand(
      ctx, pins, 0, 0, x1, "", "central vertex of the S-copy",
      [&](int r) -> WalkResult {
        const int y1 = pins[0].second;
        const Component& cb = comps_b[comp_of_b[y1]];
        const int diam_b = tree_diameter(cb.graph);

        if (diam_a != diam_b) {
          const bool big_is_a = diam_a > diam_b;
          return walk_stretch(ctx, pins, r, big_is_a ? 0 : 1,
                              big_is_a ? sa : cb, big_is_a ? x1 : y1,
                              std::min(diam_a, diam_b),
                              cb.graph.vertex_count() == 1);
        }

        int y1_local = -1;
        for (std::size_t i = 0; i < cb.vertices.size(); ++i) {
          if (cb.vertices[i] == y1) y1_local = static_cast<int>(i);
        }
        const std::vector<int> centers = tree_centers(cb.graph);
        if (std::find(centers.begin(), centers.end(), y1_local) ==
            centers.end()) {
          // Non-central reply: its eccentricity exceeds the shared radius,
          // and nothing in the S-copy matches that distance.
          const auto dist = bfs_distances(cb.graph, y1_local);
          int probe = y1_local;
          int best = -1;
          for (int v = 0; v < cb.graph.vertex_count(); ++v) {
            if (dist[v] && *dist[v] > best) {
              best = *dist[v];
              probe = v;
            }
          }
          return expand(ctx, pins, r, 1, cb.vertices[probe],
                        "distance-doubling",
                        "eccentric probe beyond the shared radius",
                        [&](int r2) {
                          return walk_distance(ctx, pins, r2, 0, 1);
                        });
        }

        const RootedView view_b = make_view(gb, cb, y1);
        const int root_a = view_a.tree.root();
        const int root_b = view_b.tree.root();
        if (view_a.code[root_a] == view_b.code[root_b]) {
          throw std::logic_error(
              "dispatch: centered subtrees are isomorphic although B has no "
              "copy of S, unanticipated");
        }
        if (rooted_diverging(view_b.tree, view_b.code)) {
          return walk_descent(ctx, view_a, view_b, pins, r, root_a, root_b);
        }

        // Non-diverging host: locate the deepest vertex whose branches are
        // all diverging yet two of them coincide, then walk to it.
        int t_vertex = -1;
        std::vector<char> nondiv(view_b.tree.vertex_count(), 0);
        std::vector<int> order{root_b};
        std::vector<int> expanded;
        while (!order.empty()) {
          const int v = order.back();
          order.pop_back();
          expanded.push_back(v);
          for (const int c : view_b.tree.children(v)) order.push_back(c);
        }
        for (auto it = expanded.rbegin(); it != expanded.rend(); ++it) {
          const int v = *it;
          bool dup = false;
          std::vector<std::string> kid_codes;
          for (const int c : view_b.tree.children(v)) {
            if (nondiv[c]) nondiv[v] = 1;
            kid_codes.push_back(view_b.code[c]);
          }
          std::sort(kid_codes.begin(), kid_codes.end());
          if (std::adjacent_find(kid_codes.begin(), kid_codes.end()) !=
              kid_codes.end()) {
            dup = true;
          }
          if (dup && !nondiv[v]) t_vertex = v;  // deepest wins: post-order
          if (dup) nondiv[v] = 1;
        }
        if (t_vertex < 0) {
          t_vertex = -1;
          for (auto it = expanded.rbegin(); it != expanded.rend(); ++it) {
            if (nondiv[*it]) {
              t_vertex = *it;
              break;
            }
          }
        }
        if (t_vertex < 0) {
          throw std::logic_error(
              "dispatch: component is marked non-diverging but no duplicate "
              "branches found, unanticipated");
        }
        int z1 = -1;
        int z2 = -1;
        const std::vector<int>& tc = view_b.tree.children(t_vertex);
        for (std::size_t i = 0; i < tc.size() && z1 < 0; ++i) {
          for (std::size_t j = i + 1; j < tc.size(); ++j) {
            if (view_b.code[tc[i]] == view_b.code[tc[j]]) {
              z1 = tc[i];
              z2 = tc[j];
              break;
            }
          }
        }
        if (z1 < 0) {
          throw std::logic_error(
              "dispatch: chosen branch vertex has no duplicate children, "
              "unanticipated");
        }
        std::vector<int> targets;
        for (int v = t_vertex; v != root_b; v = view_b.tree.parent(v)) {
          targets.push_back(v);
        }
        std::reverse(targets.begin(), targets.end());
        targets.push_back(z1);
        return walk_path(ctx, view_a, view_b, pins, r, targets, 0, root_a,
                         z2);
      });

  return make_transcript(walk);
}

StrategyTranscript distance_double(const Graph& a, const Graph& b,
                                   const std::vector<std::pair<int, int>>& pins,
                                   int rounds) {
  for (const auto& [x, y] : pins) {
    if (x < 0 || x >= a.vertex_count() || y < 0 || y >= b.vertex_count()) {
      throw std::invalid_argument("distance_double: pin out of range");
    }
  }
  PlayCtx ctx{a, b, rounds};

  bool consistent = true;
  for (std::size_t i = 0; i < pins.size() && consistent; ++i) {
    Pins rest(pins.begin(), pins.begin() + i);
    consistent = pin_consistent(ctx, rest, pins[i]);
  }
  if (!consistent) {
    // Nothing to play: the position is already lost for Duplicator.
    StrategyTranscript transcript;
    transcript.outcome = GameOutcome{Player::Spoiler, std::nullopt};
    return transcript;
  }

  std::size_t best_i = 0;
  std::size_t best_j = 0;
  int smallest = INT_MAX;
  for (std::size_t i = 0; i < pins.size(); ++i) {
    for (std::size_t j = i + 1; j < pins.size(); ++j) {
      const auto d = pair_discrepancy(ctx, pins, i, j);
      if (d && *d < smallest) {
        smallest = *d;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (smallest == INT_MAX) {
    throw std::invalid_argument(
        "distance_double: no pinned pair with mismatched distances");
  }
  int need = 0;
  while ((1 << need) < smallest + 1) ++need;
  if (need > rounds) {
    throw std::invalid_argument(
        "distance_double: insufficient rounds, need ceil(log2(d+1)) = " +
        std::to_string(need));
  }

  Pins play(pins);
  const WalkResult walk = walk_distance(ctx, play, 0, best_i, best_j);
  return make_transcript(walk);
}

}  // namespace eflab
