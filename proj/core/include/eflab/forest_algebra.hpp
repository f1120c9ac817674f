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

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eflab/canonical.hpp"
#include "eflab/ef_game.hpp"
#include "eflab/graph.hpp"

namespace eflab {

// Evidence that `threshold` copies of the structure are k-round equivalent
// to threshold+1 .. threshold+probes_verified copies. Empirical: the probes
// are game results, not a proof over all larger unions.
struct ThresholdCertificate {
  Graph structure;
  int k = 0;
  Logic logic = Logic::FO;
  std::optional<int> threshold;  // absent: nothing worked within max_probe
  int probes_verified = 0;

  bool found() const { return threshold.has_value(); }
};

// Smallest a <= max_probe with a*G equivalent to (a+j)*G for every probed
// j in [1, probes]. Scans a upward and returns at the first success; an
// exhausted scan reports an absent threshold instead of throwing. The game
// size guard is raised internally to fit (max_probe + probes) copies.
ThresholdCertificate find_union_threshold(const Graph& g, int k, Logic logic,
                                          int max_probe = 8, int probes = 3);
ThresholdCertificate find_union_threshold(const Graph& g, int k, Logic logic,
                                          int max_probe, int probes, GameContext& ctx);

// Conclusion of the union congruence law: whether h1+g1 and h2+g2 are
// k-round equivalent. Callers arrange h1 equivalent to h2 and g1 to g2 and
// assert the result; a false under those preconditions is a counterexample.
bool union_congruence_check(const Graph& h1, const Graph& h2, const Graph& g1,
                            const Graph& g2, int k, Logic logic);
bool union_congruence_check(const Graph& h1, const Graph& h2, const Graph& g1,
                            const Graph& g2, int k, Logic logic, GameContext& ctx);

// Shared meaning of component class ids: id = index of the representative
// that founded the class, in arrival order, so ids are comparable exactly
// for signatures built against the same pool. A canonical-code cache makes
// repeated isomorphic components free. Components must be trees.
class ClassPool {
 public:
  ClassPool(int k, Logic logic) : k_(k), logic_(logic) {}
  ClassPool(int k, Logic logic, GameLimits limits) : k_(k), logic_(logic), ctx_(limits) {}

  EquivClassId component_class(const Graph& component);

  int k() const { return k_; }
  Logic logic() const { return logic_; }
  const std::vector<Graph>& representatives() const { return reps_; }
  GameContext& context() { return ctx_; }

 private:
  int k_;
  Logic logic_;
  GameContext ctx_;
  std::vector<Graph> reps_;
  std::unordered_map<CanonicalCode, EquivClassId> code_cache_;
};

// Forest reduced to component classes with capped multiplicities. An entry
// value m < cap means exactly m copies; m == cap means "cap or more". Two
// signatures are comparable only with equal (k, logic, cap).
struct ForestSignature {
  std::map<EquivClassId, int> entries;
  int cap = 1;
  int k = 0;
  Logic logic = Logic::FO;
};

// Classifies every component against the pool and caps multiplicities.
// The pool supplies k and logic; the cap should be a certified union
// threshold (then equal signatures soundly imply forest equivalence).
ForestSignature forest_signature(const Forest& f, ClassPool& pool, int cap);

// Entry-map equality after checking comparability; mismatched (k, logic,
// cap) is a caller bug and throws.
bool signatures_equal(const ForestSignature& a, const ForestSignature& b);

// Largest per-representative threshold over the pool, a uniform cap valid
// for every class seen so far. Absent when any representative has no
// threshold within max_probe.
std::optional<int> uniform_cap(ClassPool& pool, int max_probe = 8, int probes = 3);

std::string to_string(const ForestSignature& s);

}  // namespace eflab
