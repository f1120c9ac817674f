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

#include "eflab/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

#include "eflab/metrics.hpp"

namespace eflab {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("automorphism count exceeds 64 bits");
  }
  return r;
}

std::uint64_t factorial64(std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r = checked_mul(r, i);
  return r;
}

// Codes for every vertex's subtree, children sorted, optional label after
// the opening parenthesis. Bottom-up over reversed preorder, so no deep
// recursion on path-like trees.
std::vector<std::string> all_subtree_codes(const RootedTree& t,
                                           const std::vector<std::uint32_t>* labels) {
  std::vector<std::string> code(t.vertex_count());
  const std::vector<int> order = t.subtree_vertices(t.root());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<std::string> kids;
    kids.reserve(t.children(v).size());
    // code[c] stays intact: callers read the full per-vertex table.
    for (const int c : t.children(v)) kids.push_back(code[c]);
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    if (labels != nullptr) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%x:", (*labels)[v]);
      s += buf;
    }
    for (const std::string& k : kids) s += k;
    s += ")";
    code[v] = std::move(s);
  }
  return code;
}

// Two adjacent centers are merged into a single fixed point by subdividing
// the central edge; the automorphism group is unchanged.
RootedTree root_at_center(const Graph& tree, int* subdivided) {
  const std::vector<int> centers = tree_centers(tree);
  if (centers.size() == 1) {
    if (subdivided != nullptr) *subdivided = 0;
    return RootedTree::from_tree(tree, centers[0]);
  }
  const int n = tree.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : tree.edges()) {
    if ((u == centers[0] && v == centers[1]) || (u == centers[1] && v == centers[0])) continue;
    edges.emplace_back(u, v);
  }
  edges.emplace_back(centers[0], n);
  edges.emplace_back(centers[1], n);
  if (subdivided != nullptr) *subdivided = 1;
  return RootedTree::from_tree(Graph(n + 1, std::move(edges)), n);
}

}  // namespace

CanonicalCode rooted_canonical_code(const RootedTree& t) {
  return all_subtree_codes(t, nullptr)[t.root()];
}

CanonicalCode labeled_rooted_code(const RootedTree& t, const std::vector<std::uint32_t>& labels) {
  if (static_cast<int>(labels.size()) != t.vertex_count()) {
    throw std::invalid_argument("labeled_rooted_code: label count mismatch");
  }
  return all_subtree_codes(t, &labels)[t.root()];
}

CanonicalCode tree_canonical_code(const Graph& tree) {
  const std::vector<int> centers = tree_centers(tree);
  CanonicalCode best;
  for (const int c : centers) {
    CanonicalCode code = rooted_canonical_code(RootedTree::from_tree(tree, c));
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

CanonicalCode labeled_tree_code(const Graph& tree, const std::vector<std::uint32_t>& labels) {
  if (static_cast<int>(labels.size()) != tree.vertex_count()) {
    throw std::invalid_argument("labeled_tree_code: label count mismatch");
  }
  const std::vector<int> centers = tree_centers(tree);
  CanonicalCode best;
  for (const int c : centers) {
    CanonicalCode code = labeled_rooted_code(RootedTree::from_tree(tree, c), labels);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

CanonicalCode forest_canonical_code(const Graph& forest) {
  std::vector<CanonicalCode> parts;
  for (const Component& c : components(forest)) {
    parts.push_back(tree_canonical_code(c.graph));
  }
  std::sort(parts.begin(), parts.end());
  CanonicalCode out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '+';
    out += parts[i];
  }
  return out;
}

CanonicalCode graph_canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("graph_canonical_code: guarded to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur(static_cast<std::size_t>(n) * (n - 1) / 2, '0');
  do {
    std::fill(cur.begin(), cur.end(), '0');
    std::size_t idx = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++idx) {
        if (g.has_edge(perm[u], perm[v])) cur[idx] = '1';
      }
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return "G" + std::to_string(n) + ":" + best;
}

bool trees_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return tree_canonical_code(a) == tree_canonical_code(b);
}

bool rooted_trees_isomorphic(const RootedTree& a, const RootedTree& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return rooted_canonical_code(a) == rooted_canonical_code(b);
}

std::uint64_t rooted_automorphism_count(const RootedTree& t) {
  const std::vector<std::string> code = all_subtree_codes(t, nullptr);
  std::uint64_t total = 1;
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::map<std::string, std::uint64_t> mult;
    for (const int c : t.children(v)) ++mult[code[c]];
    for (const auto& [key, count] : mult) {
      (void)key;
      total = checked_mul(total, factorial64(count));
    }
  }
  return total;
}

std::uint64_t automorphism_count(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 1;
  if (!is_connected(g)) {
    // Components permute only within isomorphism classes.
    std::map<CanonicalCode, std::pair<std::uint64_t, std::uint64_t>> groups;
    for (const Component& c : components(g)) {
      const CanonicalCode code = is_tree(c.graph) ? "T" + tree_canonical_code(c.graph)
                                                  : graph_canonical_code(c.graph);
      auto& [count, aut] = groups[code];
      ++count;
      aut = automorphism_count(c.graph);
    }
    std::uint64_t total = 1;
    for (const auto& [code, entry] : groups) {
      (void)code;
      total = checked_mul(total, checked_mul(factorial64(entry.first),
                                             [&] {
                                               std::uint64_t p = 1;
                                               for (std::uint64_t i = 0; i < entry.first; ++i) {
                                                 p = checked_mul(p, entry.second);
                                               }
                                               return p;
                                             }()));
    }
    return total;
  }
  if (is_tree(g)) {
    return rooted_automorphism_count(root_at_center(g, nullptr));
  }
  if (n > 10) throw std::invalid_argument("automorphism_count: non-tree guarded to n <= 10");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if (!g.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace eflab
