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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eflab/formula.hpp"

namespace eflab {

namespace {

// Either a graph or a rooted tree presented to the atom semantics.
struct EvalStructure {
  const Graph* graph = nullptr;
  const RootedTree* tree = nullptr;

  int size() const { return graph ? graph->vertex_count() : tree->vertex_count(); }
};

struct Env {
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::uint32_t>> sets;
};

int term_value(const Term& t, const EvalStructure& s, const Env& env) {
  if (t.kind == Term::Kind::Root) return s.tree->root();
  for (auto it = env.elements.rbegin(); it != env.elements.rend(); ++it) {
    if (it->first == t.name) return it->second;
  }
  throw std::logic_error("evaluate: unbound element variable (validation gap)");
}

std::uint32_t set_value(const std::string& name, const Env& env) {
  for (auto it = env.sets.rbegin(); it != env.sets.rend(); ++it) {
    if (it->first == name) return it->second;
  }
  throw std::logic_error("evaluate: unbound set variable (validation gap)");
}

// Next bitmask with the same popcount (Gosper), or 0 on wraparound.
std::uint32_t next_same_popcount(std::uint32_t mask) {
  const std::uint32_t c = mask & (0u - mask);
  const std::uint32_t r = mask + c;
  if (r == 0) return 0;
  return (((r ^ mask) >> 2) / c) | r;
}

class Evaluator {
 public:
  Evaluator(const EvalStructure& s, const EvalOptions& options) : s_(s), options_(options) {}

  bool eval(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Adjacent: {
        const int a = term_value(f.lhs, s_, env_);
        const int b = term_value(f.rhs, s_, env_);
        return s_.graph->has_edge(a, b);
      }
      case Formula::Kind::Equal:
        return term_value(f.lhs, s_, env_) == term_value(f.rhs, s_, env_);
      case Formula::Kind::ParentChild: {
        const int parent = term_value(f.lhs, s_, env_);
        const int child = term_value(f.rhs, s_, env_);
        return child != s_.tree->root() && s_.tree->parent(child) == parent;
      }
      case Formula::Kind::Membership: {
        const int v = term_value(f.lhs, s_, env_);
        return (set_value(f.set_name, env_) >> v) & 1u;
      }
      case Formula::Kind::Not:
        return !eval(*f.child);
      case Formula::Kind::And:
        return eval(*f.child) && eval(*f.child2);
      case Formula::Kind::Or:
        return eval(*f.child) || eval(*f.child2);
      case Formula::Kind::Implies:
        return !eval(*f.child) || eval(*f.child2);
      case Formula::Kind::Iff:
        return eval(*f.child) == eval(*f.child2);
      case Formula::Kind::ExistsElement:
        return eval_element_quantifier(f, true);
      case Formula::Kind::ForallElement:
        return !eval_element_quantifier(f, false);
      case Formula::Kind::ExistsSet:
        return eval_set_quantifier(f, true);
      case Formula::Kind::ForallSet:
        return !eval_set_quantifier(f, false);
    }
    throw std::logic_error("evaluate: bad kind");
  }

 private:
  // For exists: returns whether some witness satisfies the body.
  // For forall: returns whether some witness FALSIFIES the body.
  bool eval_element_quantifier(const Formula& f, bool want) {
    const int n = s_.size();
    env_.elements.emplace_back(f.var_name, 0);
    for (int v = 0; v < n; ++v) {
      env_.elements.back().second = v;
      if (eval(*f.child) == want) {
        env_.elements.pop_back();
        return true;
      }
    }
    env_.elements.pop_back();
    return false;
  }

  bool eval_set_quantifier(const Formula& f, bool want) {
    const int n = s_.size();
    if (n > options_.mso_subset_limit) {
      throw std::invalid_argument("evaluate: set quantifier on a structure with " +
                                  std::to_string(n) + " vertices exceeds the limit of " +
                                  std::to_string(options_.mso_subset_limit));
    }
    if (n > 25) {
      throw std::invalid_argument("evaluate: set quantifier enumeration capped at 25 vertices");
    }
    env_.sets.emplace_back(f.set_name, 0);
    // Increasing popcount, then increasing value within each popcount.
    for (int pc = 0; pc <= n; ++pc) {
      std::uint32_t mask = pc == 0 ? 0u : (1u << pc) - 1u;
      while (true) {
        env_.sets.back().second = mask;
        if (eval(*f.child) == want) {
          env_.sets.pop_back();
          return true;
        }
        if (pc == 0) break;
        mask = next_same_popcount(mask);
        if (mask == 0 || mask >= (n >= 32 ? 0xffffffffu : (1u << n))) break;
      }
    }
    env_.sets.pop_back();
    return false;
  }

  EvalStructure s_;
  EvalOptions options_;
  Env env_;
};

}  // namespace

bool evaluate(const Formula& f, const Graph& g, const EvalOptions& options) {
  validate_sentence(f, Vocabulary::Graph);
  EvalStructure s;
  s.graph = &g;
  return Evaluator(s, options).eval(f);
}

bool evaluate(const Formula& f, const RootedTree& t, const EvalOptions& options) {
  validate_sentence(f, Vocabulary::RootedTree);
  EvalStructure s;
  s.tree = &t;
  return Evaluator(s, options).eval(f);
}

}  // namespace eflab
