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

#include "eflab/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace eflab {

namespace bounds_detail {

inline long long bit_count(const BigInt& v) {
  return v == 0 ? 0 : static_cast<long long>(boost::multiprecision::msb(v)) + 1;
}

inline BigInt flog2(const BigInt& v) {  // v >= 1
  return BigInt(static_cast<long long>(boost::multiprecision::msb(v)));
}

inline BigInt clog2(const BigInt& v) {  // v >= 1
  if (v <= 1) return BigInt(0);
  return BigInt(static_cast<long long>(boost::multiprecision::msb(v - 1)) + 1);
}

// P(depth, v): v under `depth` applications of 2^x. The identity
// P(d, 0) = P(d-1, 1) (both equal the tower over an extra level) lets the
// canonical form keep v >= 1 whenever depth >= 1.
struct Leveled {
  int depth = 0;
  BigInt v;
};

Leveled canon(Leveled x, bool upper) {
  while (x.depth >= 1 && x.v == 0) {
    x.depth -= 1;
    x.v = 1;
  }
  while (x.depth >= 1 && x.v <= 63) {
    x.v = BigInt(1) << x.v.convert_to<unsigned>();
    x.depth -= 1;
  }
  while (bit_count(x.v) > TowerExpr::kBitCutoff) {
    x.v = upper ? clog2(x.v) : flog2(x.v);
    x.depth += 1;
  }
  return x;
}

// Raise to `target` depth so the result still dominates the input.
Leveled lift_up(Leveled x, int target) {
  while (x.depth < target) {
    x.v = (x.v <= 1) ? BigInt(1) : clog2(x.v);
    x.depth += 1;
  }
  return x;
}

// Raise to `target` depth so the result is still dominated by the input.
// Fails once v reaches 0: T(d) has no representation one level deeper.
std::optional<Leveled> lift_down(Leveled x, int target) {
  while (x.depth < target) {
    if (x.v == 0) return std::nullopt;
    x.v = (x.v == 1) ? BigInt(0) : flog2(x.v);
    x.depth += 1;
  }
  return x;
}

// Exact depth decrease while 2^v stays within the bit cap.
Leveled expand_down(Leveled x, int target) {
  while (x.depth > target && x.v < TowerExpr::kBitCutoff) {
    x.v = BigInt(1) << x.v.convert_to<unsigned long long>();
    x.depth -= 1;
  }
  return x;
}

// Certifies P(a) <= P(b) (strictly when `strict`). `a` is treated as an
// upper bound and `b` as a lower bound, so every rounding step preserves
// the claimed direction; returning false only means "not certified".
bool leveled_le(Leveled a, Leveled b, bool strict) {
  a = canon(a, true);
  b = canon(b, false);
  if (a.depth > b.depth) a = expand_down(a, b.depth);
  if (b.depth > a.depth) b = expand_down(b, a.depth);
  if (a.depth == b.depth) return strict ? a.v < b.v : a.v <= b.v;
  if (a.depth < b.depth) {
    a = lift_up(a, b.depth);
    return strict ? a.v < b.v : a.v <= b.v;
  }
  auto b2 = lift_down(b, a.depth);
  if (!b2) return false;
  return strict ? a.v < b2->v : a.v <= b2->v;
}

// Deterministic total key for pairs the bounds cannot separate.
int key_cmp(const Leveled& a, const Leveled& b) {
  if (a.depth != b.depth) return a.depth < b.depth ? -1 : 1;
  return a.v.compare(b.v);
}

// A value dominating both inputs.
Leveled lub(Leveled x, Leveled y) {
  x = canon(x, true);
  y = canon(y, true);
  int d = std::max(x.depth, y.depth);
  x = lift_up(x, d);
  y = lift_up(y, d);
  return Leveled{d, std::max(x.v, y.v)};
}

// The better (larger) of two lower bounds; either choice stays valid.
Leveled pick_max_lower(Leveled x, Leveled y) {
  if (leveled_le(x, y, false)) return y;
  return x;
}

// c * P(d, v) <= P(d, v + ceil_log2(c)) for d >= 1: the constant moves one
// level down, where adding j costs only +j because P grows by at least one
// per unit step of its argument.
Leveled mul_const_upper(Leveled x, const BigInt& c) {  // c >= 1
  x = canon(x, true);
  if (x.depth == 0) {
    x.v *= c;
    return canon(x, true);
  }
  x.v += clog2(c);
  return canon(x, true);
}

Leveled mul_const_lower(Leveled x, const BigInt& c) {  // c >= 1
  x = canon(x, false);
  if (x.depth == 0) {
    x.v *= c;
    return canon(x, false);
  }
  if (x.depth == 1) {
    x.v += flog2(c);
    return canon(x, false);
  }
  return x;  // drop the constant below depth 1
}

// P(d, v)^2 <= P(d, v+1) for d >= 2; exact 2^(2v) at depth 1.
Leveled sq_upper(Leveled x) {
  x = canon(x, true);
  if (x.depth == 0) {
    x.v *= x.v;
    return canon(x, true);
  }
  if (x.depth == 1) {
    x.v *= 2;
    return canon(x, true);
  }
  x.v += 1;
  return canon(x, true);
}

Leveled leveled_mul_upper(Leveled x, Leveled y) {
  x = canon(x, true);
  y = canon(y, true);
  if (x.depth == 0 && y.depth == 0) {
    x.v *= y.v;
    return canon(x, true);
  }
  if (x.depth == 0) return x.v == 0 ? Leveled{0, 0} : mul_const_upper(y, std::max(x.v, BigInt(1)));
  if (y.depth == 0) return y.v == 0 ? Leveled{0, 0} : mul_const_upper(x, std::max(y.v, BigInt(1)));
  return sq_upper(lub(x, y));
}

Leveled leveled_mul_lower(Leveled x, Leveled y) {
  x = canon(x, false);
  y = canon(y, false);
  if (x.depth == 0 && y.depth == 0) {
    x.v *= y.v;
    return canon(x, false);
  }
  if (x.depth == 0) return x.v == 0 ? Leveled{0, 0} : mul_const_lower(y, x.v);
  if (y.depth == 0) return y.v == 0 ? Leveled{0, 0} : mul_const_lower(x, y.v);
  return pick_max_lower(x, y);
}

// log2 of an upper bound, still an upper bound.
Leveled log2_upper(Leveled x) {
  x = canon(x, true);
  if (x.depth == 0) return Leveled{0, clog2(std::max(x.v, BigInt(1)))};
  x.depth -= 1;
  return x;
}

}  // namespace bounds_detail

using bounds_detail::Leveled;

struct TowerExpr::Node {
  Kind kind;
  std::shared_ptr<const Node> a, b;
  long long s = 0;  // Tower s / Binomial n / Factorial n
  long long r = 0;  // Binomial r
  BigInt lit;
  std::optional<BigInt> exact;
  Leveled lo, hi;
};

namespace {

using bounds_detail::bit_count;
using bounds_detail::canon;
using bounds_detail::clog2;

std::shared_ptr<TowerExpr::Node> new_node(TowerExpr::Kind kind) {
  auto n = std::make_shared<TowerExpr::Node>();
  n->kind = kind;
  return n;
}

void seal(TowerExpr::Node& n) {
  if (n.exact) {
    n.lo = Leveled{0, *n.exact};
    n.hi = n.lo;
  }
  n.lo = canon(n.lo, false);
  n.hi = canon(n.hi, true);
}

}  // namespace

TowerExpr::Kind TowerExpr::kind() const { return node_->kind; }

bool TowerExpr::evaluable() const { return node_->exact.has_value(); }

const BigInt& TowerExpr::value() const {
  if (!node_->exact) throw std::logic_error("TowerExpr: value beyond the evaluation cutoff");
  return *node_->exact;
}

long long TowerExpr::log2_floor() const {
  const BigInt& v = value();
  if (v == 0) throw std::logic_error("TowerExpr: log2 of zero");
  return static_cast<long long>(boost::multiprecision::msb(v));
}

int TowerExpr::tower_height() const { return node_->hi.depth; }

TowerExpr TowerExpr::literal(BigInt v) {
  if (v < 0) throw std::invalid_argument("TowerExpr: negative literal");
  if (bit_count(v) > kBitCutoff) throw std::invalid_argument("TowerExpr: literal beyond cutoff");
  auto n = new_node(Kind::Literal);
  n->lit = v;
  n->exact = std::move(v);
  seal(*n);
  return TowerExpr(std::move(n));
}

TowerExpr TowerExpr::pow2(const TowerExpr& e) {
  auto n = new_node(Kind::Pow2);
  n->a = e.node_;
  if (e.node_->exact && *e.node_->exact < kBitCutoff) {
    n->exact = BigInt(1) << e.node_->exact->convert_to<unsigned long long>();
  } else {
    n->lo = Leveled{e.node_->lo.depth + 1, e.node_->lo.v};
    n->hi = Leveled{e.node_->hi.depth + 1, e.node_->hi.v};
  }
  seal(*n);
  return TowerExpr(std::move(n));
}

TowerExpr TowerExpr::sum(const TowerExpr& a, const TowerExpr& b) {
  auto n = new_node(Kind::Sum);
  n->a = a.node_;
  n->b = b.node_;
  if (a.node_->exact && b.node_->exact) {
    BigInt v = *a.node_->exact + *b.node_->exact;
    if (bit_count(v) <= kBitCutoff) n->exact = std::move(v);
  }
  if (!n->exact) {
    n->lo = bounds_detail::pick_max_lower(a.node_->lo, b.node_->lo);
    n->hi = bounds_detail::mul_const_upper(bounds_detail::lub(a.node_->hi, b.node_->hi), 2);
  }
  seal(*n);
  return TowerExpr(std::move(n));
}

TowerExpr TowerExpr::product(const TowerExpr& a, const TowerExpr& b) {
  auto n = new_node(Kind::Product);
  n->a = a.node_;
  n->b = b.node_;
  if (a.node_->exact && b.node_->exact &&
      bit_count(*a.node_->exact) + bit_count(*b.node_->exact) <= kBitCutoff + 1) {
    BigInt v = *a.node_->exact * *b.node_->exact;
    if (bit_count(v) <= kBitCutoff) n->exact = std::move(v);
  }
  if (!n->exact) {
    n->lo = bounds_detail::leveled_mul_lower(a.node_->lo, b.node_->lo);
    n->hi = bounds_detail::leveled_mul_upper(a.node_->hi, b.node_->hi);
  }
  seal(*n);
  return TowerExpr(std::move(n));
}

TowerExpr TowerExpr::power(const TowerExpr& base, const TowerExpr& exponent) {
  Leveled blo = canon(base.node_->lo, false);
  if (blo.depth == 0 && blo.v < 1) {
    throw std::invalid_argument("TowerExpr: power base must be at least 1");
  }
  auto n = new_node(Kind::Power);
  n->a = base.node_;
  n->b = exponent.node_;
  if (base.node_->exact && exponent.node_->exact) {
    const BigInt& bv = *base.node_->exact;
    const BigInt& ev = *exponent.node_->exact;
    if (ev == 0) {
      n->exact = BigInt(1);
    } else if (bv == 1) {
      n->exact = BigInt(1);
    } else if (ev <= (1LL << 40) && bit_count(bv) * ev.convert_to<long long>() <= kBitCutoff) {
      n->exact = boost::multiprecision::pow(bv, ev.convert_to<unsigned>());
      if (bit_count(*n->exact) > kBitCutoff) n->exact.reset();
    }
  }
  if (!n->exact) {
    Leveled elo = canon(exponent.node_->lo, false);
    bool exp_ge1 = elo.depth >= 1 || elo.v >= 1;
    n->lo = exp_ge1 ? blo : Leveled{0, 1};
    Leveled log_hi = bounds_detail::log2_upper(base.node_->hi);
    Leveled e_hi = bounds_detail::leveled_mul_upper(exponent.node_->hi, log_hi);
    n->hi = Leveled{e_hi.depth + 1, e_hi.v};
  }
  seal(*n);
  return TowerExpr(std::move(n));
}

TowerExpr TowerExpr::binomial(long long nn, long long rr) {
  if (nn < 0 || rr < 0 || rr > nn || nn > 100000) {
    throw std::invalid_argument("TowerExpr: binomial out of range");
  }
  auto n = new_node(Kind::Binomial);
  n->s = nn;
  n->r = rr;
  BigInt v = 1;
  long long r = std::min(rr, nn - rr);
  for (long long i = 0; i < r; ++i) {
    v *= (nn - i);
    v /= (i + 1);
  }
  n->exact = std::move(v);
  seal(*n);
  return TowerExpr(std::move(n));
}

TowerExpr TowerExpr::factorial(long long nn) {
  if (nn < 0 || nn > 50000) throw std::invalid_argument("TowerExpr: factorial out of range");
  auto n = new_node(Kind::Factorial);
  n->s = nn;
  BigInt v = 1;
  for (long long i = 2; i <= nn; ++i) v *= i;
  n->exact = std::move(v);
  seal(*n);
  return TowerExpr(std::move(n));
}

TowerExpr tower(int s) {
  if (s < 1 || s > 1000000) throw std::invalid_argument("tower: s must be in [1, 1000000]");
  auto n = std::make_shared<TowerExpr::Node>();
  n->kind = TowerExpr::Kind::Tower;
  n->s = s;
  BigInt t5 = 2;
  for (int i = 2; i <= 5; ++i) t5 = BigInt(1) << t5.convert_to<unsigned long long>();
  if (s <= 5) {
    BigInt v = 2;
    for (int i = 2; i <= s; ++i) v = BigInt(1) << v.convert_to<unsigned long long>();
    n->exact = std::move(v);
    n->lo = Leveled{0, *n->exact};
    n->hi = n->lo;
  } else {
    n->lo = Leveled{s - 5, t5};
    n->hi = n->lo;
  }
  n->lo = canon(n->lo, false);
  n->hi = canon(n->hi, true);
  return TowerExpr(
      std::shared_ptr<const TowerExpr::Node>(std::move(n)));
}

int TowerExpr::compare(const TowerExpr& o) const {
  if (node_->exact && o.node_->exact) {
    int c = node_->exact->compare(*o.node_->exact);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (bounds_detail::leveled_le(node_->hi, o.node_->lo, true)) return -1;
  if (bounds_detail::leveled_le(o.node_->hi, node_->lo, true)) return 1;
  if (bounds_detail::leveled_le(node_->hi, o.node_->lo, false) &&
      bounds_detail::leveled_le(o.node_->hi, node_->lo, false)) {
    return 0;  // sandwiched: provably equal
  }
  // Bounds overlap and at least one side is beyond the cutoff: fall back
  // to a deterministic structural key so the order stays total.
  int c = bounds_detail::key_cmp(canon(node_->hi, true), canon(o.node_->hi, true));
  if (c != 0) return c < 0 ? -1 : 1;
  c = bounds_detail::key_cmp(canon(node_->lo, false), canon(o.node_->lo, false));
  if (c != 0) return c < 0 ? -1 : 1;
  c = to_string(500).compare(o.to_string(500));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::optional<bool> TowerExpr::certified_le(const TowerExpr& o) const {
  if (node_->exact && o.node_->exact) return *node_->exact <= *o.node_->exact;
  if (bounds_detail::leveled_le(node_->hi, o.node_->lo, false)) return true;
  if (bounds_detail::leveled_le(o.node_->hi, node_->lo, true)) return false;
  return std::nullopt;
}

namespace {

void render(const TowerExpr::Node& n, std::string& out, std::size_t max_len);

void render_child(const TowerExpr::Node& n, std::string& out, std::size_t max_len) {
  bool atom = n.kind == TowerExpr::Kind::Literal || n.kind == TowerExpr::Kind::Tower ||
              n.kind == TowerExpr::Kind::Binomial || n.kind == TowerExpr::Kind::Factorial;
  if (atom) {
    render(n, out, max_len);
  } else {
    out += '(';
    render(n, out, max_len);
    out += ')';
  }
}

void render(const TowerExpr::Node& n, std::string& out, std::size_t max_len) {
  if (out.size() >= max_len) return;
  switch (n.kind) {
    case TowerExpr::Kind::Literal:
      if (bit_count(n.lit) <= 128) {
        out += n.lit.str();
      } else {
        out += "~2^";
        out += std::to_string(static_cast<long long>(boost::multiprecision::msb(n.lit)));
      }
      break;
    case TowerExpr::Kind::Pow2:
      out += "2^";
      render_child(*n.a, out, max_len);
      break;
    case TowerExpr::Kind::Sum:
      out += '(';
      render(*n.a, out, max_len);
      out += '+';
      render(*n.b, out, max_len);
      out += ')';
      break;
    case TowerExpr::Kind::Product:
      out += '(';
      render(*n.a, out, max_len);
      out += '*';
      render(*n.b, out, max_len);
      out += ')';
      break;
    case TowerExpr::Kind::Power:
      render_child(*n.a, out, max_len);
      out += '^';
      render_child(*n.b, out, max_len);
      break;
    case TowerExpr::Kind::Tower:
      out += "T(" + std::to_string(n.s) + ")";
      break;
    case TowerExpr::Kind::Binomial:
      out += "C(" + std::to_string(n.s) + "," + std::to_string(n.r) + ")";
      break;
    case TowerExpr::Kind::Factorial:
      out += std::to_string(n.s) + "!";
      break;
  }
}

}  // namespace

std::string TowerExpr::to_string(std::size_t max_len) const {
  std::string out;
  render(*node_, out, max_len);
  if (out.size() > max_len) {
    out.resize(max_len);
    out += "...";
  }
  return out;
}

int log_star(long long k) {
  if (k < 1) throw std::invalid_argument("log_star: k must be >= 1");
  if (k <= 2) return 1;
  if (k <= 4) return 2;
  if (k <= 16) return 3;
  if (k <= 65536) return 4;
  return 5;  // T(5) = 2^65536 exceeds any 64-bit input
}

namespace {

TowerExpr lit(long long v) { return TowerExpr::literal(BigInt(v)); }

TowerExpr ehr_base(int k, int t, int l, StructureKind structure) {
  if (structure == StructureKind::Graphs) {
    return TowerExpr::pow2(lit(static_cast<long long>(k) * k - k));
  }
  if (k >= 5) return TowerExpr::pow2(TowerExpr::literal((BigInt(1) << k) - 2));
  if (k == 4) return TowerExpr::product(lit(3), TowerExpr::pow2(lit(13)));
  // Generic vocabulary base: binary edge and equality relations plus the
  // root constant, so s = 1 and both arities are 2.
  long long st = t + 1;
  long long exp = 4 * (st * (st - 1) / 2) + st * l;
  return TowerExpr::pow2(lit(exp));
}

}  // namespace

TowerExpr ehr_bound(int k, int t, int l, StructureKind structure) {
  if (k < 1 || k > 64) throw std::invalid_argument("ehr_bound: k must be in [1, 64]");
  if (t < 0 || l < 0 || t + l > k) {
    throw std::invalid_argument("ehr_bound: need t >= 0, l >= 0, t+l <= k");
  }
  std::map<std::pair<int, int>, TowerExpr> memo;
  std::function<TowerExpr(int, int)> rec = [&](int tt, int ll) -> TowerExpr {
    auto it = memo.find({tt, ll});
    if (it != memo.end()) return it->second;
    TowerExpr r = (tt + ll == k)
                      ? ehr_base(k, tt, ll, structure)
                      : TowerExpr::pow2(TowerExpr::sum(rec(tt + 1, ll), rec(tt, ll + 1)));
    memo.emplace(std::make_pair(tt, ll), r);
    return r;
  };
  return rec(t, l);
}

namespace {

void record_audit(ClassCountBound& r, const TowerExpr& small, const TowerExpr& big) {
  r.audits_total += 1;
  auto ok = small.certified_le(big);
  if (ok.has_value()) {
    r.audits_certified += 1;
    if (!*ok) r.audit_ok = false;
  }
}

}  // namespace

ClassCountBound class_count_bound(int k, Logic logic, StructureKind structure) {
  if (logic != Logic::MSO) {
    throw std::invalid_argument(
        "class_count_bound: only the monadic bound is implemented; the first-order "
        "variants carry unspecified additive constants");
  }
  int kmin = structure == StructureKind::Graphs ? 2 : 4;
  if (k < kmin || k > 64) throw std::invalid_argument("class_count_bound: k out of range");

  ClassCountBound r{tower(k + 2 + log_star(k)), {}, {}, {}, 0, 0, true};

  if (structure == StructureKind::RootedTrees && k == 4) {
    // Direct route: the three published middle bounds on log2(log2(count)).
    TowerExpr inner = TowerExpr::sum(lit(1), TowerExpr::product(lit(6), TowerExpr::pow2(lit(13))));
    TowerExpr a = TowerExpr::sum(lit(1), TowerExpr::pow2(TowerExpr::sum(lit(1), TowerExpr::pow2(inner))));
    TowerExpr b = TowerExpr::pow2(TowerExpr::pow2(
        TowerExpr::sum(lit(3), TowerExpr::product(lit(6), TowerExpr::pow2(lit(13))))));
    TowerExpr c = tower(6);
    record_audit(r, a, b);
    record_audit(r, b, c);
    r.direct_route = {a, b, c};
    return r;
  }

  TowerExpr tilde1 = structure == StructureKind::Graphs
                         ? TowerExpr::pow2(lit(static_cast<long long>(k) * k - k))
                         : TowerExpr::pow2(TowerExpr::literal((BigInt(1) << k) - 2));
  TowerExpr hat1 = structure == StructureKind::Graphs
                       ? TowerExpr::pow2(TowerExpr::pow2(lit(k)))
                       : TowerExpr::sum(lit(k - 1), TowerExpr::pow2(TowerExpr::literal(
                                                        (BigInt(1) << k) - 1)));
  r.tilde_chain.push_back(tilde1);
  r.hat_chain.push_back(hat1);
  for (int i = 2; i <= k + 1; ++i) {
    r.tilde_chain.push_back(
        TowerExpr::pow2(TowerExpr::product(lit(2), r.tilde_chain.back())));
    r.hat_chain.push_back(TowerExpr::pow2(r.hat_chain.back()));
  }
  for (int i = 0; i <= k; ++i) record_audit(r, r.tilde_chain[i], r.hat_chain[i]);
  record_audit(r, hat1, tower(2 + log_star(k)));
  record_audit(r, r.tilde_chain.back(), r.bound);
  return r;
}

std::vector<TowerExpr> default_f_values(int k) {
  if (k < 1 || k > 64) throw std::invalid_argument("default_f_values: k must be in [1, 64]");
  std::vector<TowerExpr> f;
  f.reserve(k + 1);
  for (int b = 0; b <= k; ++b) {
    TowerExpr best = ehr_bound(k, 0, b, StructureKind::RootedTrees);
    for (int t = 1; t <= b; ++t) {
      TowerExpr cand = ehr_bound(k, t, b - t, StructureKind::RootedTrees);
      if (cand.compare(best) > 0) best = cand;
    }
    f.push_back(best);
  }
  return f;
}

ZBudget z_budget(int k, const std::vector<TowerExpr>& f_values) {
  if (k < 0 || k > 64) throw std::invalid_argument("z_budget: k must be in [0, 64]");
  if (f_values.size() != static_cast<std::size_t>(k) + 1) {
    throw std::invalid_argument("z_budget: need exactly k+1 f values");
  }
  TowerExpr z = TowerExpr::pow2(lit(k));
  for (int j = 1; j <= k; ++j) z = TowerExpr::product(z, f_values[j]);

  std::vector<std::vector<TowerExpr>> table(k + 1);
  table[k].assign(k + 1, lit(1));
  for (int i = k - 1; i >= 0; --i) {
    table[i].reserve(i + 1);
    for (int m = 0; m <= i; ++m) {
      table[i].push_back(TowerExpr::sum(
          table[i + 1][m], TowerExpr::product(table[i + 1][m + 1], f_values[m + 1])));
    }
  }

  ZBudget out{z, std::move(table), 0, 0, true, std::nullopt};
  // Suffix products f(m+1) * ... * f(k) for the audit right-hand sides.
  std::vector<TowerExpr> suffix(k + 2, lit(1));
  for (int m = k; m >= 1; --m) suffix[m] = TowerExpr::product(f_values[m], suffix[m + 1]);
  for (int i = 0; i <= k; ++i) {
    for (int m = 0; m < static_cast<int>(out.table[i].size()); ++m) {
      TowerExpr rhs = TowerExpr::product(TowerExpr::pow2(lit(k - i)), suffix[m + 1]);
      out.audits_total += 1;
      auto ok = out.table[i][m].certified_le(rhs);
      if (ok.has_value()) {
        out.audits_certified += 1;
        if (!*ok) out.audit_ok = false;
      }
    }
  }
  out.z00_le_z = out.table[0][0].certified_le(out.z);
  return out;
}

MinRepresentativeBound min_representative_bound(int k) {
  if (k < 4 || k > 64) throw std::invalid_argument("min_representative_bound: k must be in [4, 64]");
  std::vector<TowerExpr> f = default_f_values(k);
  TowerExpr z = z_budget(k, f).z;
  TowerExpr zf = TowerExpr::product(z, f[0]);
  TowerExpr composite = TowerExpr::power(zf, TowerExpr::sum(f[0], lit(1)));
  TowerExpr bound = tower(k + 3 + log_star(static_cast<long long>(k) + 1));
  std::optional<bool> le = composite.certified_le(bound);
  return MinRepresentativeBound{bound, composite, le};
}

namespace {

// Partitions of n labeled points as restricted growth strings.
void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> a(n, 0);
  std::function<void(int, int)> go = [&](int i, int blocks) {
    if (i == n) {
      fn(a, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      go(i + 1, std::max(blocks, b + 1));
    }
  };
  go(0, 0);
}

long long count_directed_forests(int t) {
  // Arcs on t labeled vertices; at most one arc per unordered pair and the
  // underlying undirected graph must be acyclic.
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (i != j) arcs.push_back({i, j});
  long long count = 0;
  int m = static_cast<int>(arcs.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> parent(t);
    for (int i = 0; i < t; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    bool ok = true;
    std::vector<std::vector<bool>> used(t, std::vector<bool>(t, false));
    for (int e = 0; e < m && ok; ++e) {
      if (!(mask & (1 << e))) continue;
      auto [u, v] = arcs[e];
      int lo = std::min(u, v), hi = std::max(u, v);
      if (used[lo][hi]) {
        ok = false;
        break;
      }
      used[lo][hi] = true;
      int ru = find(u), rv = find(v);
      if (ru == rv) {
        ok = false;
        break;
      }
      parent[ru] = rv;
    }
    if (ok) ++count;
  }
  return count;
}

long long count_equality_patterns(int t) {
  // Equality relations on t+1 points where they are not pairwise distinct.
  long long count = 0;
  for_each_partition(t + 1, [&](const std::vector<int>&, int blocks) {
    if (blocks < t + 1) ++count;
  });
  return count;
}

long long count_membership_patterns(int t) {
  // Worst case over the non-distinct equality patterns: each block of
  // identified points is in or out of each of the 4-t subsets.
  long long best = 0;
  for_each_partition(t + 1, [&](const std::vector<int>&, int blocks) {
    if (blocks == t + 1) return;
    best = std::max(best, 1LL << (static_cast<long long>(blocks) * (4 - t)));
  });
  return best;
}

}  // namespace

long long count_small_structures(int t, SmallStructureKind kind) {
  if (t < 1 || t > 4) throw std::invalid_argument("count_small_structures: t must be in [1, 4]");
  switch (kind) {
    case SmallStructureKind::DirectedForests:
      return count_directed_forests(t);
    case SmallStructureKind::EqualityPatterns:
      return count_equality_patterns(t);
    case SmallStructureKind::MembershipPatterns:
      return count_membership_patterns(t);
  }
  throw std::logic_error("count_small_structures: unreachable");
}

std::vector<ConstantCheck> verify_printed_constants() {
  constexpr long long kPrintedF[] = {1, 3, 19, 201};
  constexpr long long kPrintedE[] = {1, 4, 14, 51};
  constexpr long long kPrintedM[] = {8, 16, 8, 1};
  std::vector<ConstantCheck> out;
  for (int t = 1; t <= 4; ++t) {
    for (auto [kind, printed] : {std::pair{SmallStructureKind::DirectedForests, kPrintedF[t - 1]},
                                 std::pair{SmallStructureKind::EqualityPatterns, kPrintedE[t - 1]},
                                 std::pair{SmallStructureKind::MembershipPatterns, kPrintedM[t - 1]}}) {
      long long got = count_small_structures(t, kind);
      out.push_back(ConstantCheck{kind, t, got, printed, got == printed});
    }
  }
  return out;
}

AlphaValue AlphaValue::from_rational(const Rational& r) {
  if (r.num <= 0) throw std::invalid_argument("alpha must be positive");
  AlphaValue a;
  a.is_rational = true;
  a.value = r;
  a.approx = static_cast<long double>(r.num) / static_cast<long double>(r.den);
  return a;
}

AlphaValue AlphaValue::irrational(long double x) {
  if (!(x > 0)) throw std::invalid_argument("alpha must be positive");
  AlphaValue a;
  a.is_rational = false;
  a.approx = x;
  return a;
}

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Holds: return "holds";
    case LawStatus::Fails: return "fails";
    case LawStatus::Open: return "open";
  }
  return "open";
}

std::vector<LawVerdict> law_region(const AlphaValue& alpha, std::optional<int> k,
                                   std::optional<long long> l) {
  if (alpha.is_rational && alpha.value.num <= 0) {
    throw std::invalid_argument("law_region: alpha must be positive");
  }
  if (!alpha.is_rational && !(alpha.approx > 0)) {
    throw std::invalid_argument("law_region: alpha must be positive");
  }
  bool rat = alpha.is_rational;
  Rational a = alpha.value;
  // alpha = 1 + 1/l exactly when the reduced fraction is (l+1)/l.
  bool exceptional = rat && a.num == a.den + 1;
  long long ex_l = exceptional ? a.den : 0;
  if (l.has_value()) {
    if (*l < 1) throw std::invalid_argument("law_region: l must be >= 1");
    if (!exceptional || ex_l != *l) {
      throw std::invalid_argument("law_region: inconsistent inputs, alpha must equal 1 + 1/l");
    }
  }
  bool le_one = rat ? a <= Rational(1) : alpha.approx <= 1.0L;

  std::vector<LawVerdict> out;
  bool fo_fails = (rat && le_one) || exceptional;
  out.push_back(LawVerdict{Logic::FO, LawKind::ZeroOne, 0,
                           fo_fails ? LawStatus::Fails : LawStatus::Holds,
                           "fo-zero-one-characterization"});
  bool mso_fails = le_one || exceptional;
  out.push_back(LawVerdict{Logic::MSO, LawKind::ZeroOne, 0,
                           mso_fails ? LawStatus::Fails : LawStatus::Holds,
                           "mso-zero-one-characterization"});
  if (!k.has_value()) return out;
  if (*k < 1 || *k > 1000000) throw std::invalid_argument("law_region: k must be in [1, 1000000]");

  LawVerdict fo{Logic::FO, LawKind::ZeroOneK, *k, LawStatus::Open, ""};
  if (!fo_fails) {
    fo.status = LawStatus::Holds;
    fo.citation = "zero-one-law-restriction";
  } else if (exceptional) {
    // alpha = 1 + 1/l > 1.
    if (*k >= 7) {
      auto fires = TowerExpr::literal(BigInt(ex_l))
                       .certified_le(TowerExpr::product(lit(2), tower(*k - 4)));
      if (fires == true) {
        fo.status = LawStatus::Fails;
        fo.citation = "fo-k-law-small-l";
      }
    }
  } else if (rat && le_one) {
    if (*k >= 3) {
      Rational thr(1, *k - 2);
      if (a < thr) {
        fo.status = LawStatus::Holds;
        fo.citation = "fo-k-law-small-alpha";
      } else if (a == thr) {
        fo.status = LawStatus::Fails;
        fo.citation = "fo-k-law-small-alpha-boundary";
      }
    }
    if (fo.status == LawStatus::Open && *k >= 4) {
      BigInt m = (BigInt(1) << *k) - 2;
      int c = (BigInt(a.num) * m).compare(BigInt(a.den) * (m - 1));
      if (c == 0) {
        fo.status = LawStatus::Fails;
        fo.citation = "fo-k-law-near-one-boundary";
      } else if (c > 0 && a < Rational(1)) {
        fo.status = LawStatus::Holds;
        fo.citation = "fo-k-law-near-one";
      }
    }
  }
  out.push_back(fo);

  LawVerdict mso{Logic::MSO, LawKind::ZeroOneK, *k, LawStatus::Open, ""};
  if (!mso_fails) {
    mso.status = LawStatus::Holds;
    mso.citation = "zero-one-law-restriction";
  } else if (exceptional && *k >= 4) {
    auto fires = tower(*k + log_star(static_cast<long long>(*k) + 1) + 3)
                     .certified_le(TowerExpr::literal(BigInt(ex_l)));
    if (fires == true) {
      mso.status = LawStatus::Holds;
      mso.citation = "mso-k-law-large-l";
    }
  }
  out.push_back(mso);
  return out;
}

std::vector<LawVerdict> law_region_exceptional(const TowerExpr& l, std::optional<int> k) {
  if (TowerExpr::literal(BigInt(1)).certified_le(l) != std::optional<bool>(true)) {
    throw std::invalid_argument("law_region_exceptional: l must be certified >= 1");
  }
  std::vector<LawVerdict> out;
  out.push_back(
      LawVerdict{Logic::FO, LawKind::ZeroOne, 0, LawStatus::Fails, "fo-zero-one-characterization"});
  out.push_back(LawVerdict{Logic::MSO, LawKind::ZeroOne, 0, LawStatus::Fails,
                           "mso-zero-one-characterization"});
  if (!k.has_value()) return out;
  if (*k < 1 || *k > 1000000) {
    throw std::invalid_argument("law_region_exceptional: k must be in [1, 1000000]");
  }

  LawVerdict fo{Logic::FO, LawKind::ZeroOneK, *k, LawStatus::Open, ""};
  if (*k >= 7 && l.certified_le(TowerExpr::product(lit(2), tower(*k - 4))) == true) {
    fo.status = LawStatus::Fails;
    fo.citation = "fo-k-law-small-l";
  }
  out.push_back(fo);

  LawVerdict mso{Logic::MSO, LawKind::ZeroOneK, *k, LawStatus::Open, ""};
  if (*k >= 4 &&
      tower(*k + log_star(static_cast<long long>(*k) + 1) + 3).certified_le(l) == true) {
    mso.status = LawStatus::Holds;
    mso.citation = "mso-k-law-large-l";
  }
  out.push_back(mso);
  return out;
}

}  // namespace eflab
