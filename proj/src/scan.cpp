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

// Monoid scans: every value of sum c_k alpha^k over a box of exponents and
// coefficients, deduplicated, then one search Problem shared by all of them.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>
#include <unordered_map>

#include "engine.hpp"
#include "mfactor/invariants.hpp"

namespace mfactor {

namespace {

using detail::Vec;

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& x : v) {
      const auto k = static_cast<std::uint64_t>(mpz_get_si(x.get_mpz_t())) ^
                     (static_cast<std::uint64_t>(mpz_sgn(x.get_mpz_t())) << 61);
      h = (h ^ k) * 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Runs f(worker, index) over 0..n-1; each index is handled exactly once.
template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& f) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(0u, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) f(w, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Real approximation used to order values; exact sign decides near-ties.
class ValueOrder {
 public:
  explicit ValueOrder(const MonoidSpec& spec) : spec_(spec) {
    alpha_ = spec.alpha.refined_to(BigRational(1, BigInt(1) << 80));
  }
  double approx(const CanonicalValue& v) const {
    if (auto q = alpha_.as_rational()) return evaluate(value_polynomial(v), *q).get_d();
    return evaluate(value_polynomial(v), alpha_.lo()).get_d();
  }
  bool less(const CanonicalValue& a, double fa, const CanonicalValue& b, double fb) const {
    const double tol = 1e-9 * std::max({1.0, std::fabs(fa), std::fabs(fb)});
    if (fa < fb - tol) return true;
    if (fb < fa - tol) return false;
    if (a == b) return false;
    CanonicalValue diff = a;
    for (std::size_t i = 0; i < diff.coords.size(); ++i) diff.coords[i] -= b.coords[i];
    const int s = value_sign(diff, spec_);
    if (s != 0) return s < 0;
    return a < b;
  }

 private:
  const MonoidSpec& spec_;
  AlgebraicNumber alpha_ = AlgebraicNumber::rational(BigRational(1));
};

// The shared search setup for one scan.
struct ScanContext {
  std::unique_ptr<detail::Problem> problem;
  unsigned D = 0;
  bool complete_bounds = false;
};

ScanContext make_context(const MonoidSpec& spec, const std::vector<ScannedElement>& elems, unsigned max_exponent,
                         const Bounds& bounds) {
  if (spec.classification.atomic.value == false) throw UnsupportedError("monoid is not atomic: " + describe(spec));
  ScanContext ctx;
  std::optional<CanonicalValue> top;
  if (!elems.empty()) top = elems.back().value;
  if (bounds.max_exponent) {
    ctx.D = *bounds.max_exponent;
  } else if (spec.alpha_gt_one) {
    ctx.D = top ? default_max_exponent(*top, spec) : 0;
  } else if (spec.atoms.kind == AtomKind::FiniteList && !spec.atoms.exponents.empty()) {
    ctx.D = spec.atoms.exponents.back();
  } else {
    throw UnsupportedError("alpha <= 1: scans need an explicit maximum exponent D");
  }
  const auto gens = spec.atom_exponents(ctx.D);
  ctx.problem = std::make_unique<detail::Problem>(spec, gens, std::max(ctx.D, max_exponent), bounds.cap);
  if (spec.alpha_gt_one) {
    bool ok = !top || ctx.D >= default_max_exponent(*top, spec);
    if (ok && bounds.cap && top) {
      const BigRational lim(BigInt(static_cast<unsigned long>(*bounds.cap)) + 1);
      ok = sign_at_root(value_polynomial(*top) - RatPolynomial::constant(lim), spec.alpha) < 0;
    }
    ctx.complete_bounds = ok;
  }
  return ctx;
}

Factorization to_factorization(const detail::Problem& p, const std::vector<std::uint64_t>& sol) {
  std::vector<std::pair<unsigned, std::uint64_t>> pairs;
  for (std::size_t i = 0; i < sol.size(); ++i)
    if (sol[i]) pairs.emplace_back(p.exponents()[i], sol[i]);
  return Factorization::from_pairs(pairs);
}

}  // namespace

std::vector<ScannedElement> scan_elements(const MonoidSpec& spec, unsigned max_exponent,
                                          std::uint64_t max_coefficient) {
  const auto table = detail::power_coordinates(spec.min_poly, max_exponent);
  const auto e = static_cast<std::size_t>(spec.rank);
  BigInt L = 1;
  for (const auto& row : table)
    for (const auto& c : row) L = lcm(L, c.get_den());
  std::vector<Vec> v;
  for (const auto& row : table) {
    Vec s(e);
    for (std::size_t j = 0; j < e; ++j) s[j] = BigRational(row[j] * L).get_num();
    v.push_back(std::move(s));
  }
  const std::size_t K = v.size();
  const unsigned long M = static_cast<unsigned long>(max_coefficient);

  // odometer over coefficient tuples; sum tracks the scaled value
  std::unordered_map<Vec, std::size_t, VecHash> seen;
  std::vector<std::vector<unsigned long>> exprs;
  std::vector<unsigned long> digits(K, 0);
  Vec sum(e);
  for (;;) {
    std::size_t k = 0;
    while (k < K && digits[k] == M) {
      digits[k] = 0;
      for (std::size_t j = 0; j < e; ++j) sum[j] -= M * v[k][j];
      ++k;
    }
    if (k == K) break;
    ++digits[k];
    for (std::size_t j = 0; j < e; ++j) sum[j] += v[k][j];
    if (seen.emplace(sum, exprs.size()).second) exprs.push_back(digits);
  }

  std::vector<ScannedElement> out;
  out.reserve(seen.size());
  std::vector<std::pair<Vec, std::size_t>> items(seen.begin(), seen.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [s, idx] : items) {
    ScannedElement el;
    el.value.coords.resize(e);
    for (std::size_t j = 0; j < e; ++j) el.value.coords[j] = BigRational(s[j], L);
    for (auto& c : el.value.coords) c.canonicalize();
    std::vector<BigInt> coeffs;
    for (auto d : exprs[idx]) coeffs.emplace_back(d);
    el.expr = ElementExpr(IntPolynomial(std::move(coeffs)));
    out.push_back(std::move(el));
  }
  ValueOrder order(spec);
  std::vector<double> approx(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) approx[i] = order.approx(out[i].value);
  std::vector<std::size_t> perm(out.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return order.less(out[a].value, approx[a], out[b].value, approx[b]);
  });
  std::vector<ScannedElement> sorted;
  sorted.reserve(out.size());
  for (auto i : perm) sorted.push_back(std::move(out[i]));
  return sorted;
}

CatenaryScanResult catenary_monoid_scan(const MonoidSpec& spec, const ScanOptions& opts) {
  const auto elems = scan_elements(spec, opts.max_exponent, opts.max_coefficient);
  const ScanContext ctx = make_context(spec, elems, opts.max_exponent, opts.bounds);
  const unsigned workers = worker_count(opts.workers, elems.size());
  std::vector<std::unique_ptr<detail::Searcher>> searchers;
  for (unsigned w = 0; w < workers; ++w) searchers.push_back(std::make_unique<detail::Searcher>(*ctx.problem));

  std::vector<std::uint64_t> c(elems.size());
  std::vector<char> exhausted(elems.size(), 0);
  parallel_for(elems.size(), workers, [&](unsigned w, std::size_t i) {
    const auto t = ctx.problem->scale(elems[i].value.coords);
    if (!t) return;
    const auto out = searchers[w]->search(*t, {opts.bounds.node_budget, 0});
    exhausted[i] = out.budget_exhausted;
    std::vector<Factorization> z;
    for (const auto& s : out.solutions) z.push_back(to_factorization(*ctx.problem, s));
    c[i] = catenary_of(z);
  });

  CatenaryScanResult r;
  r.elements = elems.size();
  r.complete = ctx.complete_bounds;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (exhausted[i]) r.complete = false;
    ++r.histogram[c[i]];
    if (!r.argmax || c[i] > r.observed_sup) {
      r.observed_sup = c[i];
      r.argmax = elems[i];
    }
  }
  if (spec.route == Route::RationalCyclic && denom(spec.q) != 1 && numer(spec.q) != 1) {
    r.formula = std::max(numer(spec.q), denom(spec.q)).get_ui();
    r.formula_holds = r.observed_sup <= *r.formula;
  }
  return r;
}

std::vector<CanonicalValue> betti_family(const MonoidSpec& spec, unsigned max_m) {
  std::vector<CanonicalValue> out;
  if (spec.route == Route::AlgebraicEval) return out;
  const BigRational& q = spec.q;
  BigRational t = numer(q);
  const auto e = static_cast<std::size_t>(spec.rank);
  for (unsigned m = 0; m <= max_m; ++m) {
    for (std::size_t r = 0; r < e; ++r) {
      CanonicalValue v;
      v.coords.assign(e, BigRational(0));
      v.coords[r] = t;
      out.push_back(std::move(v));
    }
    t = t * numer(q) / denom(q);
  }
  return out;
}

BettiScanResult betti_scan(const MonoidSpec& spec, const ScanOptions& opts) {
  const auto elems = scan_elements(spec, opts.max_exponent, opts.max_coefficient);
  const ScanContext ctx = make_context(spec, elems, opts.max_exponent, opts.bounds);
  const detail::Problem& P = *ctx.problem;
  const unsigned workers = worker_count(opts.workers, elems.size());

  struct Worker {
    std::unique_ptr<detail::Searcher> searcher;
    std::unordered_map<Vec, bool, VecHash> memo;
    bool exhausted = false;
  };
  std::vector<Worker> pool(workers);
  for (auto& w : pool) w.searcher = std::make_unique<detail::Searcher>(P);
  const auto& levels = P.levels();

  std::vector<char> betti(elems.size(), 0);
  parallel_for(elems.size(), workers, [&](unsigned wi, std::size_t i) {
    Worker& W = pool[wi];
    auto member = [&](const Vec& w) {
      if (auto it = W.memo.find(w); it != W.memo.end()) return it->second;
      const auto out = W.searcher->search(w, {opts.bounds.node_budget, 1});
      if (out.budget_exhausted) W.exhausted = true;
      const bool m = !out.solutions.empty();
      W.memo.emplace(w, m);
      return m;
    };
    const auto t = P.scale(elems[i].value.coords);
    if (!t) return;
    std::vector<std::size_t> A;
    std::vector<Vec> rest;
    for (std::size_t g = 0; g < levels.size(); ++g) {
      Vec w = *t;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= levels[g].v[j];
      if (member(w)) {
        A.push_back(g);
        rest.push_back(std::move(w));
      }
    }
    // components of the atom graph
    std::vector<std::size_t> comp(A.size());
    for (std::size_t a = 0; a < A.size(); ++a) comp[a] = a;
    auto find = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (std::size_t a = 0; a < A.size(); ++a) {
      for (std::size_t b = a + 1; b < A.size(); ++b) {
        if (find(a) == find(b)) continue;
        Vec w = rest[a];
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= levels[A[b]].v[j];
        if (member(w)) comp[find(b)] = find(a);
      }
    }
    std::size_t roots = 0;
    for (std::size_t a = 0; a < A.size(); ++a)
      if (find(a) == a) ++roots;
    betti[i] = roots >= 2;
  });

  BettiScanResult r;
  r.elements = elems.size();
  r.complete = ctx.complete_bounds;
  for (const auto& w : pool)
    if (w.exhausted) r.complete = false;
  std::set<std::vector<BigRational>> found;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!betti[i]) continue;
    r.betti.push_back(elems[i]);
    found.insert(elems[i].value.coords);
  }
  const bool generic = spec.route != Route::AlgebraicEval && denom(spec.q) != 1 && numer(spec.q) != 1;
  if (generic) {
    r.has_formula = true;
    std::set<std::vector<BigRational>> predicted;
    std::set<std::vector<BigRational>> scanned;
    for (const auto& el : elems) scanned.insert(el.value.coords);
    for (const auto& v : betti_family(spec, opts.max_exponent + 1)) {
      if (!scanned.count(v.coords)) continue;
      predicted.insert(v.coords);
    }
    for (const auto& el : elems)
      if (predicted.count(el.value.coords)) r.formula.push_back(el);
    r.formula_matches = predicted == found;
  }
  return r;
}

FurcusWitness furcus_witness(const MonoidSpec& spec, std::uint64_t k, std::uint64_t budget, const Bounds& bounds) {
  if (!spec.alpha_gt_one) throw UnsupportedError("furcus search needs alpha > 1 for complete length sets");
  if (spec.classification.atomic.value == false) throw UnsupportedError("monoid is not atomic: " + describe(spec));
  FurcusWitness w;
  auto test = [&](const ElementExpr& x) {
    ++w.candidates;
    const auto L = length_set(canonicalize(x, spec), spec, bounds);
    if (!L.complete || L.lengths.empty()) return false;
    if (L.lengths.min() <= k) return false;
    w.found = true;
    w.expr = x;
    w.element = canonicalize(x, spec);
    w.lengths = L.lengths;
    return true;
  };
  for (std::uint64_t n = 1; n <= budget; ++n)
    if (test(ElementExpr::natural(n))) return w;
  for (const auto& el : scan_elements(spec, 3, 3))
    if (test(el.expr)) return w;
  return w;
}

}  // namespace mfactor
