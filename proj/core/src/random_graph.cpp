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

#include "eflab/random_graph.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>

#include "eflab/constructions.hpp"
#include "eflab/rng.hpp"
#include "eflab/subgraph.hpp"

namespace eflab {

namespace {

// Runs fn(0..trials-1), possibly on several threads. Each trial draws its
// randomness from a stream derived from (seed, trial), and callers store
// per-trial results into slots indexed by trial, so the output is identical
// for any thread count and schedule.
template <typename Fn>
void run_trials(int trials, Fn&& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers =
      std::max(1, std::min(trials, hw == 0 ? 1 : static_cast<int>(hw)));
  if (workers == 1) {
    for (int t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
          fn(t);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Pairs (u, v) with u < v are linearized lexicographically: the block of
// pairs with first coordinate u starts at u*n - u*(u+1)/2.
std::pair<int, int> unrank_pair(std::uint64_t index, std::uint64_t n) {
  const auto block_start = [n](std::uint64_t u) {
    return u * n - u * (u + 1) / 2;
  };
  std::uint64_t u = 0;
  const double half = static_cast<double>(n) - 0.5;
  const double disc = half * half - 2.0 * static_cast<double>(index);
  if (disc > 0.0) {
    const double guess = half - std::sqrt(disc);
    if (guess > 0.0) u = static_cast<std::uint64_t>(guess);
  }
  if (u > n - 2) u = n - 2;
  // The float guess can be off by one on block boundaries.
  while (u > 0 && block_start(u) > index) --u;
  while (u + 1 <= n - 2 && block_start(u + 1) <= index) ++u;
  const std::uint64_t v = u + 1 + (index - block_start(u));
  return {static_cast<int>(u), static_cast<int>(v)};
}

double validated_probability(const SampleConfig& config) {
  return edge_probability(config);
}

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;

  explicit UnionFind(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

double falling_factorial(int n, int v) {
  double product = 1.0;
  for (int i = 0; i < v; ++i) product *= static_cast<double>(n - i);
  return product;
}

}  // namespace

double edge_probability(const SampleConfig& config) {
  if (config.n < 1) {
    throw std::invalid_argument("SampleConfig: n must be >= 1");
  }
  if (config.trials < 1) {
    throw std::invalid_argument("SampleConfig: trials must be >= 1");
  }
  if (config.alpha.has_value() == config.p.has_value()) {
    throw std::invalid_argument(
        "SampleConfig: exactly one of alpha and p must be set");
  }
  const double p = config.p
                       ? *config.p
                       : std::pow(static_cast<double>(config.n), -*config.alpha);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("SampleConfig: p = " + std::to_string(p) +
                                " outside [0, 1]");
  }
  return p;
}

Graph sample_one(const SampleConfig& config, std::uint64_t trial) {
  const double p = validated_probability(config);
  const std::uint64_t n = static_cast<std::uint64_t>(config.n);
  const std::uint64_t pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;

  if (p >= 1.0) {
    edges.reserve(pairs);
    for (int u = 0; u + 1 < config.n; ++u) {
      for (int v = u + 1; v < config.n; ++v) edges.emplace_back(u, v);
    }
  } else if (p > 0.0 && pairs > 0) {
    CounterRng rng = CounterRng::for_trial(config.seed, trial);
    const double log_q = std::log1p(-p);
    // skip ~ Geometric(p) failures before the next success, so every pair is
    // an independent Bernoulli(p) while runtime stays O(edges).
    std::uint64_t index = 0;
    while (index < pairs) {
      const double skip =
          std::floor(std::log1p(-rng.next_unit()) / log_q);
      if (skip >= static_cast<double>(pairs - index)) break;
      index += static_cast<std::uint64_t>(skip);
      edges.push_back(unrank_pair(index, n));
      ++index;
    }
  }
  return Graph(config.n, std::move(edges));
}

Graph sample(const SampleConfig& config) { return sample_one(config, 0); }

CensusReport component_census(const Graph& g) {
  CensusReport report;
  const int n = g.vertex_count();
  if (n == 0) return report;

  UnionFind uf(n);
  for (const auto& [u, v] : g.edges()) uf.unite(u, v);

  // Isolated vertices are counted arithmetically; only multi-vertex
  // components are materialized.
  long long isolated = 0;
  std::unordered_map<int, int> slot_of_root;
  std::vector<std::vector<int>> member_lists;
  std::vector<int> local_index(n, -1);
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    if (uf.size[root] == 1) {
      ++isolated;
      continue;
    }
    auto [it, fresh] = slot_of_root.emplace(root, member_lists.size());
    if (fresh) member_lists.emplace_back();
    local_index[v] = static_cast<int>(member_lists[it->second].size());
    member_lists[it->second].push_back(v);
  }
  std::vector<std::vector<std::pair<int, int>>> component_edges(
      member_lists.size());
  for (const auto& [u, v] : g.edges()) {
    component_edges[slot_of_root[uf.find(u)]].emplace_back(local_index[u],
                                                           local_index[v]);
  }

  if (isolated > 0) {
    report.tree_components[tree_canonical_code(Graph(1, {}))] = isolated;
    report.max_component_order = 1;
  }
  for (std::size_t s = 0; s < member_lists.size(); ++s) {
    const int order = static_cast<int>(member_lists[s].size());
    report.max_component_order = std::max(report.max_component_order, order);
    if (static_cast<int>(component_edges[s].size()) == order - 1) {
      Graph component(order, component_edges[s]);
      ++report.tree_components[tree_canonical_code(component)];
    } else {
      report.is_forest = false;
      ++report.non_tree_components;
      report.non_tree_vertices += order;
    }
  }
  return report;
}

TPropertyReport verify_T_properties(const SampleConfig& config, int l) {
  const double p = validated_probability(config);
  if (l < 1 || l > 11) {
    throw std::invalid_argument("verify_T_properties: l must be in [1, 11]");
  }

  std::vector<CanonicalCode> shape_codes;
  for (const Graph& t : enumerate_trees(l + 1).trees) {
    shape_codes.push_back(tree_canonical_code(t));
  }

  TPropertyReport report;
  report.l = l;
  if (config.alpha) {
    report.alpha_effective = *config.alpha;
  } else if (config.n >= 2 && p > 0.0) {
    report.alpha_effective =
        -std::log(p) / std::log(static_cast<double>(config.n));
  } else {
    report.alpha_effective = std::numeric_limits<double>::infinity();
  }
  const double lower = 1.0 + 1.0 / (l + 1);
  const double upper = 1.0 + 1.0 / l;
  report.regime_warning =
      !(lower < report.alpha_effective && report.alpha_effective < upper);

  const int trials = config.trials;
  // vector<bool> packs bits, so parallel workers fill byte arrays instead.
  std::vector<unsigned char> t1(trials, 0);
  std::vector<unsigned char> t2(trials, 0);
  report.t3_min_tree_count.assign(trials, 0);
  run_trials(trials, [&](int t) {
    const CensusReport census = component_census(sample_one(config, t));
    t1[t] = census.is_forest ? 1 : 0;
    t2[t] = census.max_component_order <= l + 1 ? 1 : 0;
    long long min_count = std::numeric_limits<long long>::max();
    for (const CanonicalCode& code : shape_codes) {
      const auto it = census.tree_components.find(code);
      const long long count = it == census.tree_components.end() ? 0
                                                                 : it->second;
      min_count = std::min(min_count, count);
    }
    report.t3_min_tree_count[t] = min_count;
  });

  report.t1_forest.assign(t1.begin(), t1.end());
  report.t2_small_components.assign(t2.begin(), t2.end());
  long long t1_hits = 0;
  long long t2_hits = 0;
  report.t3_overall_min = std::numeric_limits<long long>::max();
  for (int t = 0; t < trials; ++t) {
    t1_hits += t1[t];
    t2_hits += t2[t];
    report.t3_overall_min =
        std::min(report.t3_overall_min, report.t3_min_tree_count[t]);
  }
  report.t1_frequency = static_cast<double>(t1_hits) / trials;
  report.t2_frequency = static_cast<double>(t2_hits) / trials;
  return report;
}

PoissonReport poisson_experiment(const Graph& pattern, double c, int n,
                                 int trials, std::uint64_t seed) {
  if (pattern.edge_count() < 1) {
    throw std::invalid_argument(
        "poisson_experiment: pattern needs at least one edge");
  }
  if (!is_strictly_balanced(pattern)) {
    throw std::invalid_argument(
        "poisson_experiment: pattern is not strictly balanced");
  }
  if (c < 0.0) {
    throw std::invalid_argument("poisson_experiment: c must be >= 0");
  }
  if (n < 1 || trials < 1) {
    throw std::invalid_argument("poisson_experiment: n and trials must be >= 1");
  }
  const int v = pattern.vertex_count();
  const int e = pattern.edge_count();
  // rho = e/v, so the threshold scaling is p = c * n^(-v/e).
  const double p =
      c * std::pow(static_cast<double>(n), -static_cast<double>(v) / e);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("poisson_experiment: p = " +
                                std::to_string(p) + " outside [0, 1]");
  }

  PoissonReport report;
  report.pattern = pattern;
  report.c = c;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.p = p;
  const double aut = static_cast<double>(automorphism_count(pattern));
  report.target_mean = std::pow(c, e) / aut;
  report.exact_mean = falling_factorial(n, v) / aut * std::pow(p, e);

  SampleConfig config;
  config.n = n;
  config.p = p;
  config.seed = seed;
  config.trials = trials;
  std::vector<long long> counts(trials, 0);
  run_trials(trials, [&](int t) {
    counts[t] = static_cast<long long>(
        count_copies(sample_one(config, t), pattern));
  });

  const long long max_count = *std::max_element(counts.begin(), counts.end());
  report.histogram.assign(max_count + 1, 0);
  double sum = 0.0;
  for (const long long count : counts) {
    ++report.histogram[count];
    sum += static_cast<double>(count);
  }
  report.empirical_mean = sum / trials;
  double squares = 0.0;
  for (const long long count : counts) {
    const double d = static_cast<double>(count) - report.empirical_mean;
    squares += d * d;
  }
  report.empirical_variance = trials > 1 ? squares / (trials - 1) : 0.0;
  report.standard_error = std::sqrt(report.empirical_variance / trials);

  // Exact total variation to Pois(target_mean): the empirical distribution is
  // supported on {0..max observed}, so the Poisson tail beyond contributes
  // wholesale.
  double l1 = 0.0;
  double tail = 1.0;
  double pmf = std::exp(-report.target_mean);
  for (long long k = 0; k <= max_count; ++k) {
    const double empirical =
        static_cast<double>(report.histogram[k]) / trials;
    l1 += std::abs(empirical - pmf);
    tail -= pmf;
    pmf *= report.target_mean / static_cast<double>(k + 1);
  }
  report.total_variation = 0.5 * (l1 + std::max(0.0, tail));
  return report;
}

ContainmentReport containment_probability(int l, const Graph& tree, int n,
                                          int trials, std::uint64_t seed) {
  if (l < 1) {
    throw std::invalid_argument("containment_probability: l must be >= 1");
  }
  if (tree.vertex_count() != l + 1) {
    throw std::invalid_argument(
        "containment_probability: tree has order " +
        std::to_string(tree.vertex_count()) + ", expected l+1 = " +
        std::to_string(l + 1));
  }
  if (tree.edge_count() != l || !is_connected(tree)) {
    throw std::invalid_argument("containment_probability: T is not a tree");
  }

  ContainmentReport report;
  report.l = l;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.alpha = 1.0 + 1.0 / l;
  report.tree_code = tree_canonical_code(tree);
  report.target =
      1.0 - std::exp(-1.0 / static_cast<double>(automorphism_count(tree)));

  SampleConfig config;
  config.n = n;
  config.alpha = report.alpha;
  config.seed = seed;
  config.trials = trials;
  validated_probability(config);

  std::vector<unsigned char> hit(trials, 0);
  run_trials(trials, [&](int t) {
    const CensusReport census = component_census(sample_one(config, t));
    hit[t] = census.tree_components.count(report.tree_code) > 0 ? 1 : 0;
  });
  long long hits = 0;
  for (const unsigned char h : hit) hits += h;
  report.frequency = static_cast<double>(hits) / trials;
  report.standard_error =
      std::sqrt(report.frequency * (1.0 - report.frequency) / trials);
  return report;
}

double connectivity_frequency(const SampleConfig& config) {
  validated_probability(config);
  std::vector<unsigned char> connected(config.trials, 0);
  run_trials(config.trials, [&](int t) {
    connected[t] = is_connected(sample_one(config, t)) ? 1 : 0;
  });
  long long hits = 0;
  for (const unsigned char c : connected) hits += c;
  return static_cast<double>(hits) / config.trials;
}

}  // namespace eflab
