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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eflab/formula.hpp"
#include "eflab/rational.hpp"

namespace eflab {

using BigInt = boost::multiprecision::cpp_int;

// Symbolic arithmetic for iterated-exponential quantities. An expression is
// a DAG over {integer literal, 2^x, x+y, x*y, x^y, T(s), C(n,r), n!} where
// T(1) = 2 and T(s) = 2^T(s-1). The exact big-integer value is cached
// whenever it fits in kBitCutoff bits; beyond that the expression carries
// certified lower/upper bounds in normalized iterated-log form, which is
// what makes astronomically large values comparable.
//
// compare() is exact on pairs where both sides are evaluable. Otherwise it
// is decided by the certified bounds (height first, then top exponents,
// which is sound for every expression shape produced in this module); when
// the bounds overlap it falls back to a deterministic structural key, so
// the order is total but such pairs are not certified. Audit code must use
// certified_le(), which never guesses.
class TowerExpr {
 public:
  enum class Kind { Literal, Pow2, Sum, Product, Power, Tower, Binomial, Factorial };

  // Exact-value cache limit, in bits.
  static constexpr long long kBitCutoff = 1LL << 20;

  static TowerExpr literal(BigInt v);
  static TowerExpr pow2(const TowerExpr& e);
  static TowerExpr sum(const TowerExpr& a, const TowerExpr& b);
  static TowerExpr product(const TowerExpr& a, const TowerExpr& b);
  // base must be >= 1 and exponent >= 0 (checked on evaluable parts).
  static TowerExpr power(const TowerExpr& base, const TowerExpr& exponent);
  static TowerExpr binomial(long long n, long long r);
  static TowerExpr factorial(long long n);

  Kind kind() const;

  bool evaluable() const;
  // Exact value; throws std::logic_error when !evaluable().
  const BigInt& value() const;
  // Index of the highest set bit of the exact value, i.e. floor(log2);
  // throws when !evaluable() or value() == 0.
  long long log2_floor() const;
  // Certified tower height: iterated-log depth of the normalized upper
  // bound. 0 for everything below the cutoff.
  int tower_height() const;

  // -1, 0, +1. Total; exact whenever both sides are evaluable.
  int compare(const TowerExpr& other) const;
  // Certified *this <= other. nullopt when the bounds cannot decide.
  std::optional<bool> certified_le(const TowerExpr& other) const;

  friend bool operator<(const TowerExpr& a, const TowerExpr& b) { return a.compare(b) < 0; }
  friend bool operator>(const TowerExpr& a, const TowerExpr& b) { return a.compare(b) > 0; }
  friend bool operator<=(const TowerExpr& a, const TowerExpr& b) { return a.compare(b) <= 0; }
  friend bool operator>=(const TowerExpr& a, const TowerExpr& b) { return a.compare(b) >= 0; }

  // Rendering is truncated with "..." once max_len is reached; shared
  // subtrees of budget tables would otherwise flatten to exponential text.
  std::string to_string(std::size_t max_len = 2000) const;

  struct Node;

 private:
  explicit TowerExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend TowerExpr tower(int s);
  std::shared_ptr<const Node> node_;
};

// T(s): T(1) = 2, T(s) = 2^T(s-1). Exact value cached for s <= 5.
// pre: 1 <= s <= 1000000.
TowerExpr tower(int s);

// Minimal i >= 1 with T(i) >= k. pre: k >= 1.
int log_star(long long k);

enum class StructureKind { Graphs, RootedTrees };

// Upper bound on the number of k-round game values of a structure with t
// pinned vertices and l pinned subsets. Base case t+l == k uses the
// sharpened counts: 2^(k^2-k) for graphs, 2^(2^k-2) for rooted trees with
// k >= 5, 3*2^13 for rooted trees with k == 4; rooted trees with k <= 3
// fall back to the generic vocabulary base 2^(4*C(t+1,2)+(t+1)l) (binary
// edge and equality relations plus the root constant). Below the base the
// recursion is bound(k,t,l) = 2^(bound(k,t+1,l)+bound(k,t,l+1)).
// pre: 1 <= k <= 64, t >= 0, l >= 0, t+l <= k.
TowerExpr ehr_bound(int k, int t, int l, StructureKind structure);

// Tower bound on the number of k-round MSO equivalence classes, together
// with the two auxiliary chains used to derive it, for audit:
//   graphs:        A(1) = 2^(k^2-k),  A(i) = 2^(2*A(i-1))
//                  B(1) = 2^(2^k),    B(i) = 2^B(i-1)
//   trees, k >= 5: A(1) = 2^(2^k-2),  B(1) = k-1+2^(2^k-1)
// with A(i) <= B(i) for i <= k+1 and B(1) <= T(2+log*(k)), hence
// bound = T(k+2+log*(k)). For trees at k == 4 the derivation is a direct
// three-step calculation instead of a chain; those middle quantities are
// returned in direct_route. Audited inequalities are non-strict.
struct ClassCountBound {
  TowerExpr bound;                      // T(k+2+log*(k))
  std::vector<TowerExpr> tilde_chain;   // A(1..k+1); empty on the k==4 tree route
  std::vector<TowerExpr> hat_chain;     // B(1..k+1); empty on the k==4 tree route
  std::vector<TowerExpr> direct_route;  // k==4 trees: the three middle bounds
  int audits_total = 0;
  int audits_certified = 0;
  bool audit_ok = true;  // no certified audit failed
};

// pre: logic == Logic::MSO (the first-order variants carry unspecified
// additive constants and are out of scope); k >= 2 for graphs, k >= 4 for
// rooted trees, k <= 64.
ClassCountBound class_count_bound(int k, Logic logic, StructureKind structure);

// Default f(k, b) for b = 0..k: the rooted-tree ehr_bound at t+l = b.
// These are the symbolic stand-ins for the exact per-type class counts,
// which are only bounded, never computed, in closed form.
std::vector<TowerExpr> default_f_values(int k);

// z = 2^k * f(1) * ... * f(k) and the budget table
//   z(k, m) = 1 for 0 <= m <= k,
//   z(i, m) = z(i+1, m) + z(i+1, m+1) * f(m+1) for 0 <= m <= i < k,
// which caps the children of a minimal representative tree. The audit
// checks z(i, m) <= 2^(k-i) * f(m+1) * ... * f(k) on every entry that the
// bound machinery can certify, and z(0,0) <= z.
struct ZBudget {
  TowerExpr z;
  std::vector<std::vector<TowerExpr>> table;  // table[i][m], 0 <= m <= i <= k
  int audits_total = 0;
  int audits_certified = 0;
  bool audit_ok = true;
  std::optional<bool> z00_le_z;
};

// pre: 0 <= k <= 64, f_values.size() == k+1 (entry b is f(k, b)).
ZBudget z_budget(int k, const std::vector<TowerExpr>& f_values);

// Order bound for a minimal rooted tree in any k-round MSO class:
// T(k+3+log*(k+1)), with the composite form (z*f(0))^(f(0)+1) it rounds up
// from exposed for audit. pre: 4 <= k <= 64.
struct MinRepresentativeBound {
  TowerExpr bound;      // T(k+3+log*(k+1))
  TowerExpr composite;  // (z*f(0))^(f(0)+1)
  std::optional<bool> composite_le_bound;
};

MinRepresentativeBound min_representative_bound(int k);

// Exhaustive counts behind the sharpened k = 4 tree base:
//   DirectedForests:    arc sets on t labeled vertices whose underlying
//                       undirected graph is a forest (no pair doubled).
//   EqualityPatterns:   partitions of t+1 labeled points with at least one
//                       block of size >= 2 (the points are not pairwise
//                       distinct).
//   MembershipPatterns: max over those partitions of the number of ways to
//                       place the distinct points in 4-t subsets, i.e.
//                       2^(blocks*(4-t)).
// pre: 1 <= t <= 4.
enum class SmallStructureKind { DirectedForests, EqualityPatterns, MembershipPatterns };

long long count_small_structures(int t, SmallStructureKind kind);

// Enumerated counts next to the published table {F: 1,3,19,201;
// E: 1,4,14,51; M: 8,16,8,1}. A mismatch is reported, never patched over.
struct ConstantCheck {
  SmallStructureKind kind;
  int t;
  long long enumerated;
  long long printed;
  bool match;
};

std::vector<ConstantCheck> verify_printed_constants();

// Exponent alpha of the edge probability p = n^-alpha. Either an exact
// rational or a value the caller asserts to be irrational (only its
// position relative to the rational thresholds is used then).
struct AlphaValue {
  bool is_rational = true;
  Rational value;          // meaningful when is_rational
  long double approx = 0;  // always set

  static AlphaValue from_rational(const Rational& r);
  static AlphaValue irrational(long double x);
};

enum class LawKind { ZeroOne, ZeroOneK };
enum class LawStatus { Holds, Fails, Open };

// status is derived only from the published theorem clauses (plus the
// definitional restriction "full zero-one law implies every k-law");
// everything else is Open. citation is the registry key of the clause that
// fired and is empty exactly when status == Open.
struct LawVerdict {
  Logic logic = Logic::FO;
  LawKind kind = LawKind::ZeroOne;
  int k = 0;  // 0 for the full laws
  LawStatus status = LawStatus::Open;
  std::string citation;
};

std::string to_string(LawStatus s);

// Verdicts for the full FO/MSO zero-one laws and, when k is given, the
// depth-k laws, at p = n^-alpha. When l is given, alpha must equal 1+1/l.
// pre: alpha > 0; k >= 1 and l >= 1 when present.
std::vector<LawVerdict> law_region(const AlphaValue& alpha, std::optional<int> k,
                                   std::optional<long long> l);

// Same verdicts on the exceptional line alpha = 1 + 1/l with l given
// symbolically, for l far beyond machine integers (the monadic depth-k
// clause needs l >= T(k+log*(k+1)+3)). Clauses fire only on certified
// inequalities. pre: l >= 1 certified; k >= 1 when present.
std::vector<LawVerdict> law_region_exceptional(const TowerExpr& l, std::optional<int> k);

}  // namespace eflab
