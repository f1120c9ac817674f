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

#include "eflab/forest_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace eflab {

namespace {

GameLimits limits_for(int vertices) {
  GameLimits limits;
  limits.fo_max_vertices = std::max(limits.fo_max_vertices, vertices);
  limits.mso_max_vertices = std::max(limits.mso_max_vertices, vertices);
  return limits;
}

}  // namespace

ThresholdCertificate find_union_threshold(const Graph& g, int k, Logic logic,
                                          int max_probe, int probes) {
  GameContext ctx(limits_for((max_probe + probes) * std::max(g.vertex_count(), 1)));
  return find_union_threshold(g, k, logic, max_probe, probes, ctx);
}

ThresholdCertificate find_union_threshold(const Graph& g, int k, Logic logic,
                                          int max_probe, int probes, GameContext& ctx) {
  if (max_probe < 1 || probes < 1) {
    throw std::invalid_argument("find_union_threshold: max_probe and probes must be >= 1");
  }
  ThresholdCertificate cert;
  cert.structure = g;
  cert.k = k;
  cert.logic = logic;
  for (int a = 1; a <= max_probe; ++a) {
    const Graph base = Graph::disjoint_union_copies(g, a);
    bool all_match = true;
    for (int j = 1; j <= probes && all_match; ++j) {
      all_match = equiv(Structure(base), Structure(Graph::disjoint_union_copies(g, a + j)),
                        k, logic, ctx);
    }
    if (all_match) {
      cert.threshold = a;
      cert.probes_verified = probes;
      return cert;
    }
  }
  return cert;
}

bool union_congruence_check(const Graph& h1, const Graph& h2, const Graph& g1,
                            const Graph& g2, int k, Logic logic) {
  const int biggest = std::max(h1.vertex_count() + g1.vertex_count(),
                               h2.vertex_count() + g2.vertex_count());
  GameContext ctx(limits_for(biggest));
  return union_congruence_check(h1, h2, g1, g2, k, logic, ctx);
}

bool union_congruence_check(const Graph& h1, const Graph& h2, const Graph& g1,
                            const Graph& g2, int k, Logic logic, GameContext& ctx) {
  return equiv(Structure(h1.disjoint_union(g1)), Structure(h2.disjoint_union(g2)), k,
               logic, ctx);
}

EquivClassId ClassPool::component_class(const Graph& component) {
  if (!is_tree(component)) {
    throw std::invalid_argument("component_class: component is not a tree");
  }
  const CanonicalCode code = tree_canonical_code(component);
  const auto hit = code_cache_.find(code);
  if (hit != code_cache_.end()) return hit->second;
  EquivClassId id = -1;
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (equiv(Structure(reps_[i]), Structure(component), k_, logic_, ctx_)) {
      id = static_cast<EquivClassId>(i);
      break;
    }
  }
  if (id < 0) {
    id = static_cast<EquivClassId>(reps_.size());
    reps_.push_back(component);
  }
  code_cache_.emplace(code, id);
  return id;
}

ForestSignature forest_signature(const Forest& f, ClassPool& pool, int cap) {
  if (cap < 1) throw std::invalid_argument("forest_signature: cap must be >= 1");
  ForestSignature sig;
  sig.cap = cap;
  sig.k = pool.k();
  sig.logic = pool.logic();
  for (const Graph& component : f.trees) {
    const EquivClassId id = pool.component_class(component);
    int& slot = sig.entries[id];
    slot = std::min(slot + 1, cap);
  }
  return sig;
}

bool signatures_equal(const ForestSignature& a, const ForestSignature& b) {
  if (a.k != b.k || a.logic != b.logic || a.cap != b.cap) {
    throw std::invalid_argument("signatures_equal: signatures built with different "
                                "(k, logic, cap) are not comparable");
  }
  return a.entries == b.entries;
}

std::optional<int> uniform_cap(ClassPool& pool, int max_probe, int probes) {
  int cap = 1;
  for (const Graph& rep : pool.representatives()) {
    const ThresholdCertificate cert =
        find_union_threshold(rep, pool.k(), pool.logic(), max_probe, probes);
    if (!cert.found()) return std::nullopt;
    cap = std::max(cap, *cert.threshold);
  }
  return cap;
}

std::string to_string(const ForestSignature& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [id, mult] : s.entries) {
    if (!first) out += ", ";
    first = false;
    out += "class " + std::to_string(id) + ": ";
    out += mult < s.cap ? std::to_string(mult) : ">=" + std::to_string(s.cap);
  }
  out += "} (k=" + std::to_string(s.k) + ", " + to_string(s.logic) +
         ", cap=" + std::to_string(s.cap) + ")";
  return out;
}

}  // namespace eflab
