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

#include "engine.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <type_traits>
#include <unordered_map>

namespace mfactor::detail {

std::vector<std::vector<BigRational>> power_coordinates(const IntPolynomial& m, unsigned D) {
  const auto e = static_cast<std::size_t>(m.degree());
  std::vector<BigRational> rel(e);
  for (std::size_t i = 0; i < e; ++i) rel[i] = -BigRational(m.coeff(i)) / BigRational(m.leading());
  std::vector<std::vector<BigRational>> out;
  out.reserve(D + 1);
  std::vector<BigRational> cur(e);
  cur[0] = 1;
  for (unsigned k = 0; k <= D; ++k) {
    out.push_back(cur);
    const BigRational top = cur[e - 1];
    for (std::size_t i = e - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < e; ++i) cur[i] += top * rel[i];
  }
  return out;
}

Problem::Problem(const MonoidSpec& spec, std::vector<unsigned> exponents, unsigned table_degree,
                 std::optional<std::uint64_t> cap, const BigInt& extra_denominator)
    : alpha_(spec.alpha),
      dim_(static_cast<std::size_t>(spec.rank)),
      table_degree_(table_degree),
      exponents_(std::move(exponents)) {
  for (unsigned k : exponents_)
    if (k > table_degree_) throw DomainError("generator exponent beyond the coordinate table");
  const auto table = power_coordinates(spec.min_poly, table_degree_);
  scale_ = abs(extra_denominator);
  if (scale_ == 0) scale_ = 1;
  for (const auto& row : table)
    for (const auto& c : row) scale_ = lcm(scale_, c.get_den());

  std::vector<Vec> lower_gens;
  Hnf lower = hermite_normal_form({}, dim_);
  for (unsigned k : exponents_) {
    Level lv;
    lv.exponent = k;
    lv.v = *scale(table[k]);
    lv.lower = lower;
    if (!lower.rows.empty() && in_span(lower, lv.v)) {
      lv.cyclic = true;
      auto with = lower.rows;
      with.push_back(lv.v);
      lv.period = pivot_product(lower) / pivot_product(hermite_normal_form(with, dim_));
    } else {
      lv.y = orthogonal_witness(lower, lv.v);
      lv.yv = dot(lv.y, lv.v);
    }
    if (lower_gens.empty()) {
      lv.has_facets = true;  // the lower cone is {0}; the lattice step already forces it
    } else if (auto f = cone_facets(lower_gens, lower, kFacetCombinationLimit)) {
      lv.has_facets = true;
      lv.facets = std::move(*f);
    }
    if (cap) lv.cap = BigInt(static_cast<unsigned long>(*cap));
    lower_gens.push_back(lv.v);
    auto rows = lower.rows;
    rows.push_back(lv.v);
    lower = hermite_normal_form(rows, dim_);
    levels_.push_back(std::move(lv));
  }
  top_ = lower;
}

std::optional<Vec> Problem::scale(const std::vector<BigRational>& coords) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_ && i < coords.size(); ++i) {
    const BigRational s = coords[i] * scale_;
    if (s.get_den() != 1) return std::nullopt;
    out[i] = s.get_num();
  }
  for (std::size_t i = dim_; i < coords.size(); ++i)
    if (coords[i] != 0) throw DomainError("coordinate vector longer than the rank");
  return out;
}

namespace {

struct Overflow {};
struct Stop {};

// Checked int64 arithmetic and plain mpz arithmetic behind one interface.
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  if (b == -1 && a == INT64_MIN) throw Overflow{};
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline bool divisible(std::int64_t a, std::int64_t b) { return a % b == 0; }
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt fdiv(const BigInt& a, const BigInt& b) { return floor_div(a, b); }
inline bool divisible(const BigInt& a, const BigInt& b) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }

template <class I>
I convert(const BigInt& x);
template <>
std::int64_t convert<std::int64_t>(const BigInt& x) {
  if (!x.fits_slong_p()) throw Overflow{};
  return x.get_si();
}
template <>
BigInt convert<BigInt>(const BigInt& x) {
  return x;
}
inline BigInt to_big(std::int64_t x) { return BigInt(static_cast<long>(x)); }
inline const BigInt& to_big(const BigInt& x) { return x; }
inline std::uint64_t to_count(std::int64_t x) { return static_cast<std::uint64_t>(x); }
inline std::uint64_t to_count(const BigInt& x) {
  if (!x.fits_ulong_p()) throw UnsupportedError("coefficient exceeds 64 bits");
  return x.get_ui();
}

template <class I>
std::vector<I> convert_vec(const Vec& v) {
  std::vector<I> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(convert<I>(x));
  return out;
}

template <class I>
I dot_i(const std::vector<I>& a, const std::vector<I>& b) {
  I s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
  return s;
}

template <class I>
struct KLevel {
  std::vector<I> v;
  bool cyclic = false;
  I period = 1;
  std::vector<I> y;
  I yv = 0;
  std::vector<std::vector<I>> hnf;
  std::vector<std::size_t> pivots;
  bool has_facets = false;
  std::vector<std::vector<I>> facets;
  std::vector<I> fv;
  bool capped = false;
  I cap = 0;
};

template <class I>
struct VecHash {
  std::size_t operator()(const std::vector<I>& v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& x : v) {
      std::uint64_t k;
      if constexpr (std::is_same_v<I, std::int64_t>) {
        k = static_cast<std::uint64_t>(x);
      } else {
        k = mpz_size(x.get_mpz_t()) ? mpz_getlimbn(x.get_mpz_t(), 0) : 0;
        k ^= static_cast<std::uint64_t>(mpz_sgn(x.get_mpz_t())) << 63;
      }
      h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

template <class I>
class SearchKernel {
 public:
  explicit SearchKernel(const Problem& p) : oracle_(p.alpha()), dim_(p.dim()) {
    for (const auto& L : p.levels()) {
      KLevel<I> k;
      k.v = convert_vec<I>(L.v);
      k.cyclic = L.cyclic;
      k.period = convert<I>(L.period);
      if (!L.cyclic) {
        k.y = convert_vec<I>(L.y);
        k.yv = convert<I>(L.yv);
      }
      for (const auto& row : L.lower.rows) k.hnf.push_back(convert_vec<I>(row));
      k.pivots = L.lower.pivots;
      k.has_facets = L.has_facets;
      for (const auto& f : L.facets) {
        k.facets.push_back(convert_vec<I>(f));
        k.fv.push_back(convert<I>(dot(f, L.v)));
      }
      if (L.cap) {
        k.capped = true;
        k.cap = convert<I>(*L.cap);
      }
      levels_.push_back(std::move(k));
    }
    stack_.assign(levels_.size(), std::vector<I>(dim_));
    tmp_.assign(levels_.size(), std::vector<I>(dim_));
  }

  std::size_t size() const { return levels_.size(); }

  // Calls f(c, residual) for each admissible coefficient at level i; stops
  // early when f returns false.
  template <class F>
  bool expand(std::size_t i, const std::vector<I>& r, F&& f) {
    const KLevel<I>& L = levels_[i];
    std::vector<I>& out = stack_[i];
    if (!L.cyclic) {
      const I num = dot_i(L.y, r);
      if (!divisible(num, L.yv)) return true;
      const I c = fdiv(num, L.yv);
      if (c < 0 || (L.capped && c > L.cap)) return true;
      residual(r, c, L.v, out);
      if (i == 0) {
        for (const auto& x : out)
          if (x != 0) return true;
      } else if (L.has_facets) {
        for (const auto& fct : L.facets)
          if (dot_i(fct, out) < 0) return true;
      } else if (sign(out) < 0) {
        return true;
      }
      return f(c, out);
    }

    I lo = 0, hi = L.cap;
    bool bounded = L.capped;
    bool facet_bounded = false;
    if (L.has_facets) {
      for (std::size_t k = 0; k < L.facets.size(); ++k) {
        const I a = dot_i(L.facets[k], r);
        const I& b = L.fv[k];
        if (b > 0) {
          const I q = fdiv(a, b);
          if (!bounded || q < hi) hi = q;
          bounded = true;
          facet_bounded = true;
        } else if (b < 0) {
          const I q = -fdiv(-a, b);  // ceil(a / b)
          if (q > lo) lo = q;
        } else if (a < 0) {
          return true;
        }
      }
    }
    if (bounded && lo > hi) return true;

    // residue class of admissible coefficients modulo the lattice index
    std::vector<I>& w = tmp_[i];
    I c0 = -1;
    for (I c = 0; c < L.period; c = add(c, I(1))) {
      residual(r, c, L.v, w);
      if (member(L, w)) {
        c0 = c;
        break;
      }
    }
    if (c0 < 0) return true;
    I start = sub(c0, lo);
    start = sub(start, mul(fdiv(start, L.period), L.period));  // (c0 - lo) mod period
    for (I c = add(lo, start); !bounded || c <= hi; c = add(c, L.period)) {
      residual(r, c, L.v, out);
      if (!facet_bounded && sign(out) < 0) break;
      if (!f(c, out)) return false;
    }
    return true;
  }

 private:
  void residual(const std::vector<I>& r, const I& c, const std::vector<I>& v, std::vector<I>& out) const {
    for (std::size_t j = 0; j < dim_; ++j) out[j] = sub(r[j], mul(c, v[j]));
  }

  bool member(const KLevel<I>& L, std::vector<I>& w) const {
    for (std::size_t k = 0; k < L.hnf.size(); ++k) {
      const std::size_t p = L.pivots[k];
      if (w[p] == 0) continue;
      if (!divisible(w[p], L.hnf[k][p])) return false;
      const I q = fdiv(w[p], L.hnf[k][p]);
      for (std::size_t j = 0; j < dim_; ++j) w[j] = sub(w[j], mul(q, L.hnf[k][j]));
    }
    for (const auto& x : w)
      if (x != 0) return false;
    return true;
  }

  int sign(const std::vector<I>& r) {
    Vec big;
    big.reserve(r.size());
    for (const auto& x : r) big.push_back(to_big(x));
    return oracle_.sign(big);
  }

  SignOracle oracle_;
  std::size_t dim_;
  std::vector<KLevel<I>> levels_;
  std::vector<std::vector<I>> stack_;
  std::vector<std::vector<I>> tmp_;
};

template <class I>
SearchOutcome run_search(SearchKernel<I>& k, const Vec& target, const SearchLimits& limits) {
  SearchOutcome out;
  const std::size_t n = k.size();
  std::vector<std::uint64_t> coeff(n);
  std::function<void(std::size_t, const std::vector<I>&)> dfs = [&](std::size_t i, const std::vector<I>& r) {
    if (++out.nodes > limits.node_budget) {
      out.budget_exhausted = true;
      throw Stop{};
    }
    k.expand(i, r, [&](const I& c, const std::vector<I>& r2) {
      coeff[i] = to_count(c);
      if (i == 0) {
        out.solutions.push_back(coeff);
        if (limits.max_results != 0 && out.solutions.size() >= limits.max_results) {
          out.truncated = true;
          throw Stop{};
        }
      } else {
        dfs(i - 1, r2);
      }
      return true;
    });
    coeff[i] = 0;
  };
  try {
    dfs(n - 1, convert_vec<I>(target));
  } catch (const Stop&) {
  }
  return out;
}

template <class I>
LengthOutcome run_lengths(SearchKernel<I>& k, const Vec& target, std::uint64_t budget) {
  LengthOutcome out;
  const std::size_t n = k.size();
  std::vector<std::unordered_map<std::vector<I>, LengthSet, VecHash<I>>> memo(n);
  std::function<LengthSet(std::size_t, const std::vector<I>&)> rec = [&](std::size_t i, const std::vector<I>& r) {
    LengthSet acc;
    if (i == 0) {
      k.expand(0, r, [&](const I& c, const std::vector<I>&) {
        acc = LengthSet::single(to_count(c));
        return false;
      });
      return acc;
    }
    if (auto it = memo[i].find(r); it != memo[i].end()) return it->second;
    if (++out.states > budget) {
      out.budget_exhausted = true;
      throw Stop{};
    }
    k.expand(i, r, [&](const I& c, const std::vector<I>& r2) {
      const LengthSet sub = rec(i - 1, r2);
      if (!sub.empty()) acc.unite(sub.shifted(to_count(c)));
      return true;
    });
    memo[i].emplace(r, acc);
    return acc;
  };
  try {
    out.lengths = rec(n - 1, convert_vec<I>(target));
  } catch (const Stop&) {
    out.lengths = {};
  }
  return out;
}

bool trivially_empty(const Problem& p, const Vec& target) {
  if (!lattice_contains(p.top_lattice(), target)) return true;
  return false;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

struct Searcher::Kernels {
  std::unique_ptr<SearchKernel<std::int64_t>> small;
  std::unique_ptr<SearchKernel<BigInt>> big;
  bool small_failed = false;
};

Searcher::Searcher(const Problem& p, Kernel kernel) : p_(p), kernel_(kernel), k_(std::make_unique<Kernels>()) {}
Searcher::~Searcher() = default;

template <class R, class F>
R Searcher::dispatch(F&& f) {
  if (kernel_ != Kernel::Big && !k_->small_failed) {
    try {
      if (!k_->small) k_->small = std::make_unique<SearchKernel<std::int64_t>>(p_);
      return f(*k_->small);
    } catch (const Overflow&) {
      if (kernel_ == Kernel::Int64) throw UnsupportedError("int64 kernel overflow");
      k_->small_failed = true;
      k_->small.reset();
    }
  }
  if (!k_->big) k_->big = std::make_unique<SearchKernel<BigInt>>(p_);
  return f(*k_->big);
}

SearchOutcome Searcher::search(const Vec& target, const SearchLimits& limits) {
  if (p_.levels().empty()) {
    SearchOutcome out;
    if (is_zero_vec(target)) out.solutions.emplace_back();
    return out;
  }
  if (trivially_empty(p_, target)) return {};
  return dispatch<SearchOutcome>([&](auto& k) { return run_search(k, target, limits); });
}

LengthOutcome Searcher::lengths(const Vec& target, std::uint64_t budget) {
  if (p_.levels().empty()) {
    LengthOutcome out;
    if (is_zero_vec(target)) out.lengths = LengthSet::single(0);
    return out;
  }
  if (trivially_empty(p_, target)) return {};
  return dispatch<LengthOutcome>([&](auto& k) { return run_lengths(k, target, budget); });
}

SearchOutcome search(const Problem& p, const Vec& target, const SearchLimits& limits, Kernel kernel) {
  return Searcher(p, kernel).search(target, limits);
}

LengthOutcome search_lengths(const Problem& p, const Vec& target, std::uint64_t budget, Kernel kernel) {
  return Searcher(p, kernel).lengths(target, budget);
}

}  // namespace mfactor::detail
