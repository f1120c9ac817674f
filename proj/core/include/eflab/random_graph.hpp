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
#include <map>
#include <optional>
#include <vector>

#include "eflab/canonical.hpp"
#include "eflab/graph.hpp"

namespace eflab {

// Binomial random graph G(n, p). The edge probability is given either as an
// exponent (p = n^-alpha) or explicitly; exactly one of the two must be set.
struct SampleConfig {
  int n = 1;
  std::optional<double> alpha;
  std::optional<double> p;
  std::uint64_t seed = 0;
  int trials = 1;
};

// Resolves the edge probability and validates the config (n >= 1, trials >= 1,
// p in [0,1], exactly one of alpha/p). Throws std::invalid_argument.
double edge_probability(const SampleConfig& config);

// One draw from G(n, p) on the stream derived from (config.seed, trial).
// Every one of the C(n,2) vertex pairs is included independently with
// probability p. Runtime is O(n + edges): candidate pair indices advance by
// geometric skips instead of testing each pair. Deterministic per
// (config, trial), independent of thread count.
Graph sample_one(const SampleConfig& config, std::uint64_t trial);

// Shorthand for trial 0.
Graph sample(const SampleConfig& config);

// Component census of one graph. Tree-shaped components are keyed by
// canonical code; components containing a cycle are only counted in the
// non_tree_* fields. Conservation: sum over tree_components of
// (code order x count) + non_tree_vertices = vertex count of g.
struct CensusReport {
  std::map<CanonicalCode, long long> tree_components;
  bool is_forest = true;
  int max_component_order = 0;
  long long non_tree_components = 0;
  long long non_tree_vertices = 0;
};

CensusReport component_census(const Graph& g);

// Monte Carlo check of the very-sparse regime shape: per trial, whether the
// graph is a forest (T1), whether every component has at most l+1 vertices
// (T2), and the minimum over tree shapes on <= l+1 vertices of the number of
// components of that shape (T3, reported as the achieved minimum rather than
// a boolean). The declared regime for the T3 clause is
// 1 + 1/(l+1) < alpha < 1 + 1/l; outside it the report carries a warning but
// the experiment still runs.
struct TPropertyReport {
  int l = 0;
  double alpha_effective = 0.0;
  bool regime_warning = false;
  std::vector<bool> t1_forest;
  std::vector<bool> t2_small_components;
  std::vector<long long> t3_min_tree_count;
  double t1_frequency = 0.0;
  double t2_frequency = 0.0;
  long long t3_overall_min = 0;
};

// Requires 1 <= l <= 11 (tree catalog guard). Trials run concurrently on
// independent derived streams; all aggregates are order-independent.
TPropertyReport verify_T_properties(const SampleConfig& config, int l);

// Distribution of copy counts of a strictly balanced pattern at the pattern's
// own density threshold, p = c * n^(-1/rho) where rho = e/v. The limit law
// predicts Pois(c^e / a) copies; exact_mean is the finite-n expectation
// n(n-1)...(n-v+1)/a * p^e, an analytic oracle rather than the limit.
struct PoissonReport {
  Graph pattern;
  double c = 0.0;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  double target_mean = 0.0;
  double exact_mean = 0.0;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;
  double standard_error = 0.0;
  // Exact total variation between the empirical copy-count distribution and
  // Pois(target_mean): computed on the truncated support {0..max observed}
  // plus the Poisson tail mass beyond it.
  double total_variation = 0.0;
  // histogram[k] = number of trials with exactly k copies; sums to trials.
  std::vector<long long> histogram;
};

// Throws std::invalid_argument when the pattern is not strictly balanced,
// has no edges, or when c * n^(-1/rho) leaves [0,1].
PoissonReport poisson_experiment(const Graph& pattern, double c, int n,
                                 int trials, std::uint64_t seed);

// Frequency of trials whose census contains a given tree T on l+1 vertices,
// at the threshold exponent alpha = 1 + 1/l. The limit is 1 - e^(-1/a(T)).
struct ContainmentReport {
  int l = 0;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  CanonicalCode tree_code;
  double frequency = 0.0;
  double standard_error = 0.0;
  double target = 0.0;
};

// Throws std::invalid_argument when T is not a tree on exactly l+1 vertices.
ContainmentReport containment_probability(int l, const Graph& tree, int n,
                                          int trials, std::uint64_t seed);

// Fraction of trials that are connected.
double connectivity_frequency(const SampleConfig& config);

}  // namespace eflab
