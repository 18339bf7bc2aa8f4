// Copyright 2026 The mfactor Authors
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

#include "mfactor/factorize.hpp"

#include <algorithm>

#include "engine.hpp"

namespace mfactor {

ElementExpr::ElementExpr(IntPolynomial poly) : poly_(std::move(poly)) {
  for (const auto& c : poly_.coefficients())
    if (c < 0) throw DomainError("element expressions need nonnegative coefficients: " + mfactor::to_string(poly_));
}

ElementExpr ElementExpr::parse(std::string_view text) { return ElementExpr(parse_int_polynomial(text)); }

ElementExpr ElementExpr::atom(unsigned k) { return ElementExpr(IntPolynomial::monomial(BigInt(1), k)); }

ElementExpr ElementExpr::natural(std::uint64_t n) {
  return ElementExpr(IntPolynomial::constant(BigInt(static_cast<unsigned long>(n))));
}

// ---- Factorization

Factorization::Factorization(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  for (auto c : counts_) length_ += c;
}

Factorization Factorization::from_pairs(const std::vector<std::pair<unsigned, std::uint64_t>>& pairs) {
  std::vector<std::uint64_t> c;
  for (const auto& [k, n] : pairs) {
    if (c.size() <= k) c.resize(k + 1, 0);
    c[k] += n;
  }
  return Factorization(std::move(c));
}

std::vector<std::pair<unsigned, std::uint64_t>> Factorization::pairs() const {
  std::vector<std::pair<unsigned, std::uint64_t>> out;
  for (std::size_t k = 0; k < counts_.size(); ++k)
    if (counts_[k] != 0) out.emplace_back(static_cast<unsigned>(k), counts_[k]);
  return out;
}

IntPolynomial Factorization::polynomial() const {
  std::vector<BigInt> c;
  c.reserve(counts_.size());
  for (auto n : counts_) c.emplace_back(static_cast<unsigned long>(n));
  return IntPolynomial(std::move(c));
}

std::string Factorization::to_string() const {
  if (counts_.empty()) return "0";
  return mfactor::to_string(polynomial());
}

bool operator<(const Factorization& a, const Factorization& b) {
  if (a.length_ != b.length_) return a.length_ < b.length_;
  // higher exponents first, so that shorter-looking supports sort earlier
  const std::size_t n = std::max(a.counts_.size(), b.counts_.size());
  for (std::size_t i = n; i-- > 0;) {
    const auto x = a.count(static_cast<unsigned>(i)), y = b.count(static_cast<unsigned>(i));
    if (x != y) return x > y;
  }
  return false;
}

// ---- LengthSet

LengthSet LengthSet::single(std::uint64_t v) {
  LengthSet s;
  s.runs_.emplace_back(v, v);
  return s;
}

LengthSet LengthSet::from_values(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  LengthSet s;
  for (auto v : values) {
    if (!s.runs_.empty() && v <= s.runs_.back().second + 1) {
      s.runs_.back().second = std::max(s.runs_.back().second, v);
    } else {
      s.runs_.emplace_back(v, v);
    }
  }
  return s;
}

LengthSet LengthSet::from_runs(std::vector<std::pair<std::uint64_t, std::uint64_t>> runs) {
  std::sort(runs.begin(), runs.end());
  LengthSet s;
  for (const auto& r : runs) {
    if (r.first > r.second) throw DomainError("length run with start after end");
    if (!s.runs_.empty() && r.first <= s.runs_.back().second + 1) {
      s.runs_.back().second = std::max(s.runs_.back().second, r.second);
    } else {
      s.runs_.push_back(r);
    }
  }
  return s;
}

bool LengthSet::contains(std::uint64_t v) const {
  auto it = std::upper_bound(runs_.begin(), runs_.end(), v,
                             [](std::uint64_t x, const auto& r) { return x < r.first; });
  if (it == runs_.begin()) return false;
  --it;
  return v <= it->second;
}

std::uint64_t LengthSet::size() const {
  std::uint64_t n = 0;
  for (const auto& [a, b] : runs_) n += b - a + 1;
  return n;
}

std::vector<std::uint64_t> LengthSet::values() const {
  std::vector<std::uint64_t> out;
  for (const auto& [a, b] : runs_)
    for (auto v = a; v <= b; ++v) out.push_back(v);
  return out;
}

LengthSet LengthSet::shifted(std::uint64_t by) const {
  LengthSet s = *this;
  for (auto& [a, b] : s.runs_) {
    a += by;
    b += by;
  }
  return s;
}

void LengthSet::unite(const LengthSet& other) {
  if (other.runs_.empty()) return;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> all;
  all.reserve(runs_.size() + other.runs_.size());
  std::merge(runs_.begin(), runs_.end(), other.runs_.begin(), other.runs_.end(), std::back_inserter(all));
  runs_.clear();
  for (const auto& r : all) {
    if (!runs_.empty() && r.first <= runs_.back().second + 1) {
      runs_.back().second = std::max(runs_.back().second, r.second);
    } else {
      runs_.push_back(r);
    }
  }
}

LengthSet LengthSet::sumset(const LengthSet& a, const LengthSet& b) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> all;
  for (const auto& x : a.runs_)
    for (const auto& y : b.runs_) all.emplace_back(x.first + y.first, x.second + y.second);
  return from_runs(std::move(all));
}

std::string LengthSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) s += ", ";
    const auto [a, b] = runs_[i];
    s += std::to_string(a);
    if (b == a + 1) s += ", " + std::to_string(b);
    if (b > a + 1) s += ".." + std::to_string(b);
  }
  return s + "}";
}

// ---- canonical values

CanonicalValue canonicalize(const IntPolynomial& p, const MonoidSpec& spec) {
  const RatPolynomial r = rem(to_rational(p), to_rational(spec.min_poly));
  CanonicalValue v;
  v.coords.assign(static_cast<std::size_t>(spec.rank), BigRational(0));
  for (std::size_t i = 0; i < r.size(); ++i) v.coords[i] = r.coeff(i);
  return v;
}

CanonicalValue canonicalize(const ElementExpr& e, const MonoidSpec& spec) { return canonicalize(e.poly(), spec); }

bool equal_in_monoid(const ElementExpr& a, const ElementExpr& b, const MonoidSpec& spec) {
  return canonicalize(a, spec) == canonicalize(b, spec);
}

RatPolynomial value_polynomial(const CanonicalValue& v) { return RatPolynomial(v.coords); }

int value_sign(const CanonicalValue& v, const MonoidSpec& spec) {
  return sign_at_root(value_polynomial(v), spec.alpha);
}

unsigned default_max_exponent(const CanonicalValue& x, const MonoidSpec& spec) {
  if (!spec.alpha_gt_one) throw UnsupportedError("alpha <= 1: a maximum exponent D must be given");
  const RatPolynomial v = value_polynomial(x);
  if (sign_at_root(v - RatPolynomial::constant(BigRational(1)), spec.alpha) < 0) return 0;
  return static_cast<unsigned>(floor_log(v, spec.alpha));
}

namespace {

bool is_unit_spec(const MonoidSpec& spec) {
  // N0[1] = N0: the single atom 1
  return spec.route == Route::RationalCyclic && spec.q == 1;
}

struct Prepared {
  detail::Problem problem;
  std::optional<detail::Vec> target;
  BoundsUsed used;
  bool complete_if_finished = false;
};

Prepared prepare(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds, unsigned expr_degree) {
  if (spec.classification.atomic.value == false)
    throw UnsupportedError("monoid is not atomic: " + describe(spec));
  if (x.coords.size() != static_cast<std::size_t>(spec.rank))
    throw DomainError("canonical value has the wrong number of coordinates");
  const int sg = value_sign(x, spec);
  if (sg < 0) throw DomainError("element value is negative");

  unsigned D = 0;
  if (bounds.max_exponent) {
    D = *bounds.max_exponent;
  } else if (spec.alpha_gt_one) {
    D = default_max_exponent(x, spec);
  } else if (spec.atoms.kind == AtomKind::FiniteList && !spec.atoms.exponents.empty()) {
    D = spec.atoms.exponents.back();
  } else {
    throw UnsupportedError("alpha <= 1: a maximum exponent D must be given");
  }
  const auto gens = spec.atom_exponents(D);

  BigInt den = 1;
  for (const auto& c : x.coords) den = lcm(den, c.get_den());
  Prepared p{detail::Problem(spec, gens, std::max(D, expr_degree), bounds.cap, den), std::nullopt, {}, false};
  p.target = p.problem.scale(x.coords);
  p.used = {D, bounds.cap, bounds.node_budget};

  if (spec.alpha_gt_one) {
    bool ok = true;
    if (sg > 0 && sign_at_root(value_polynomial(x) - RatPolynomial::constant(BigRational(1)), spec.alpha) >= 0)
      ok = D >= default_max_exponent(x, spec);
    if (ok && bounds.cap) {
      // every coefficient is at most value / alpha^k <= value
      const BigRational top(BigInt(static_cast<unsigned long>(*bounds.cap)) + 1);
      ok = sign_at_root(value_polynomial(x) - RatPolynomial::constant(top), spec.alpha) < 0;
    }
    p.complete_if_finished = ok;
  } else if (is_unit_spec(spec)) {
    p.complete_if_finished = !bounds.cap || BigRational(BigInt(static_cast<unsigned long>(*bounds.cap))) >= x.coords[0];
  }
  return p;
}

void check_enumerable(const MonoidSpec& spec) {
  if (spec.classification.atomic.value == false) throw UnsupportedError("monoid is not atomic: " + describe(spec));
  if (!spec.supports_enumeration()) throw UnsupportedError("atoms of " + describe(spec) + " are not enumerable");
}

FactorizationSetResult enumerate_impl(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds,
                                      unsigned expr_degree) {
  Prepared p = prepare(x, spec, bounds, expr_degree);
  FactorizationSetResult res;
  res.bounds_used = p.used;
  if (p.target) {
    detail::SearchLimits limits{bounds.node_budget, bounds.max_results};
    const auto out = detail::search(p.problem, *p.target, limits);
    res.budget_exhausted = out.budget_exhausted;
    res.truncated = out.truncated;
    res.nodes = out.nodes;
    const auto& ex = p.problem.exponents();
    for (const auto& sol : out.solutions) {
      std::vector<std::pair<unsigned, std::uint64_t>> pairs;
      for (std::size_t i = 0; i < sol.size(); ++i)
        if (sol[i]) pairs.emplace_back(ex[i], sol[i]);
      res.factorizations.push_back(Factorization::from_pairs(pairs));
    }
    std::sort(res.factorizations.begin(), res.factorizations.end());
  }
  res.complete = p.complete_if_finished && !res.budget_exhausted && !res.truncated;
  return res;
}

LengthSetResult lengths_impl(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds,
                             unsigned expr_degree) {
  Prepared p = prepare(x, spec, bounds, expr_degree);
  LengthSetResult res;
  res.bounds_used = p.used;
  if (p.target) {
    const auto out = detail::search_lengths(p.problem, *p.target, bounds.node_budget);
    res.lengths = out.lengths;
    res.budget_exhausted = out.budget_exhausted;
    res.states = out.states;
  }
  res.complete = p.complete_if_finished && !res.budget_exhausted;
  return res;
}

unsigned degree_of(const ElementExpr& e) {
  return e.poly().is_zero() ? 0u : static_cast<unsigned>(e.poly().degree());
}

}  // namespace

FactorizationSetResult enumerate_factorizations(const ElementExpr& x, const MonoidSpec& spec, const Bounds& bounds) {
  check_enumerable(spec);
  return enumerate_impl(canonicalize(x, spec), spec, bounds, degree_of(x));
}

FactorizationSetResult enumerate_factorizations(const CanonicalValue& x, const MonoidSpec& spec,
                                                const Bounds& bounds) {
  return enumerate_impl(x, spec, bounds, 0);
}

LengthSetResult length_set(const ElementExpr& x, const MonoidSpec& spec, const Bounds& bounds) {
  check_enumerable(spec);
  return lengths_impl(canonicalize(x, spec), spec, bounds, degree_of(x));
}

LengthSetResult length_set(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds) {
  return lengths_impl(x, spec, bounds, 0);
}

MembershipResult membership(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds) {
  MembershipResult m;
  if (value_sign(x, spec) < 0) {
    m.complete = true;
    return m;
  }
  Bounds b = bounds;
  b.max_results = 1;
  const auto r = enumerate_impl(x, spec, b, 0);
  if (!r.factorizations.empty()) {
    m.member = true;
    m.complete = true;
    m.witness = r.factorizations.front();
  } else {
    m.complete = r.complete;
  }
  return m;
}

}  // namespace mfactor
