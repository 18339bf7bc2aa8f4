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

#include "mfactor/realroot.hpp"

#include <functional>

namespace mfactor {
namespace {

int sgn(const BigRational& q) { return sgn(q.get_num()); }

// Sign of g on [lo, hi] (0 <= lo) when the interval image excludes zero.
// g = g+ - g- with both parts increasing on the nonnegative axis.
template <class T>
std::optional<int> interval_sign(const Polynomial<T>& g, const BigRational& lo, const BigRational& hi) {
  BigRational pos_lo = 0, pos_hi = 0, neg_lo = 0, neg_hi = 0;
  BigRational plo = 1, phi = 1;
  for (const auto& c : g.coefficients()) {
    if (c > 0) {
      pos_lo += c * plo;
      pos_hi += c * phi;
    } else if (c < 0) {
      neg_lo -= c * plo;
      neg_hi -= c * phi;
    }
    plo *= lo;
    phi *= hi;
  }
  if (pos_lo - neg_hi > 0) return 1;
  if (pos_hi - neg_lo < 0) return -1;
  return std::nullopt;
}

// Sign variations of the coefficient sequence, zeros skipped.
int variations(const RatPolynomial& f) {
  int count = 0, last = 0;
  for (const auto& c : f.coefficients()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Descartes bound for the number of roots of f in the open interval (a, b).
int descartes_count(const RatPolynomial& f, const BigRational& a, const BigRational& b) {
  // h(x) = f(a + (b - a)x) maps (0, 1); x^n h(1/x) maps (1, inf); shift by 1.
  RatPolynomial h = taylor_shift(f, a);
  std::vector<BigRational> scaled(h.coefficients());
  BigRational w = 1;
  for (auto& c : scaled) {
    c *= w;
    w *= (b - a);
  }
  std::vector<BigRational> rev(scaled.rbegin(), scaled.rend());
  return variations(taylor_shift(RatPolynomial(std::move(rev)), BigRational(1)));
}

BigRational root_bound(const IntPolynomial& m) {
  BigInt top = 0;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) top = std::max(top, BigInt(abs(m.coefficients()[i])));
  return BigRational(1) + make_rational(top, abs(m.leading()));
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(IntPolynomial min_poly, BigRational lo, BigRational hi, int root_index)
    : min_poly_(std::move(min_poly)), lo_(std::move(lo)), hi_(std::move(hi)), root_index_(root_index) {
  if (min_poly_.degree() < 1) throw DomainError("algebraic number needs a nonconstant polynomial");
  if (!(lo_ > 0) || !(lo_ < hi_)) throw DomainError("isolating interval must satisfy 0 < lo < hi");
  const int a = sgn(evaluate(min_poly_, lo_));
  const int b = sgn(evaluate(min_poly_, hi_));
  if (a * b >= 0) throw DomainError("polynomial does not change sign on the isolating interval");
}

AlgebraicNumber AlgebraicNumber::rational(const BigRational& q) {
  if (q <= 0) throw DomainError("rational generator must be positive");
  const IntPolynomial m{-numer(q), denom(q)};
  return AlgebraicNumber(m, q / 2, q * 2, 0);
}

std::optional<BigRational> AlgebraicNumber::as_rational() const {
  if (min_poly_.degree() != 1) return std::nullopt;
  return make_rational(-min_poly_.coeff(0), min_poly_.coeff(1));
}

AlgebraicNumber AlgebraicNumber::refined() const {
  const BigRational mid = (lo_ + hi_) / 2;
  const int s_mid = sgn(evaluate(min_poly_, mid));
  if (s_mid == 0) {
    // the root is mid itself; keep it strictly inside
    return AlgebraicNumber(min_poly_, (lo_ + mid) / 2, (mid + hi_) / 2, root_index_);
  }
  const int s_lo = sgn(evaluate(min_poly_, lo_));
  if (s_lo * s_mid < 0) return AlgebraicNumber(min_poly_, lo_, mid, root_index_);
  return AlgebraicNumber(min_poly_, mid, hi_, root_index_);
}

AlgebraicNumber AlgebraicNumber::refined_to(const BigRational& width) const {
  if (width <= 0) throw DomainError("refinement width must be positive");
  AlgebraicNumber a = *this;
  while (a.hi_ - a.lo_ > width) a = a.refined();
  return a;
}

std::string AlgebraicNumber::decimal(int digits) const {
  if (auto q = as_rational()) return decimal_string(*q, digits);
  BigRational width = 1;
  for (int i = 0; i <= digits; ++i) width /= 10;
  const AlgebraicNumber a = refined_to(width);
  return decimal_string((a.lo_ + a.hi_) / 2, digits);
}

std::vector<AlgebraicNumber> isolate_positive_roots(const IntPolynomial& m_in) {
  if (m_in.is_zero()) throw DomainError("root isolation of the zero polynomial");
  if (m_in.degree() < 1) return {};
  if (poly_gcd(m_in, derivative(m_in)).degree() > 0)
    throw DomainError("polynomial is not square-free: " + to_string(m_in));
  IntPolynomial m = normalize_primitive(m_in);
  if (m.coeff(0) == 0) {
    // square-free, so X divides m exactly once
    m = to_integer(divrem(m, IntPolynomial::x()).quot);
  }
  const RatPolynomial mr = to_rational(m);
  std::vector<std::pair<BigRational, BigRational>> found;

  std::function<void(const BigRational&, const BigRational&)> isolate = [&](const BigRational& a,
                                                                             const BigRational& b) {
    const int v = descartes_count(mr, a, b);
    if (v == 0) return;
    if (v == 1) {
      found.emplace_back(a, b);
      return;
    }
    const BigRational mid = (a + b) / 2;
    if (evaluate(mr, mid) == 0) {
      isolate(a, mid);
      BigRational delta = (b - a) / 4;
      while (descartes_count(mr, mid - delta, mid) != 0 || descartes_count(mr, mid, mid + delta) != 0) delta /= 2;
      found.emplace_back(mid - delta, mid + delta);
      isolate(mid, b);
      return;
    }
    isolate(a, mid);
    isolate(mid, b);
  };
  if (m.degree() >= 1) isolate(BigRational(0), root_bound(m));

  std::vector<AlgebraicNumber> out;
  const int s0 = sgn(m.coeff(0));
  for (auto [lo, hi] : found) {
    // move lo off zero: m keeps the sign of m(0) left of the smallest root
    while (lo == 0) {
      const BigRational mid = hi / 2;
      const int s = sgn(evaluate(mr, mid));
      if (s == 0) {
        lo = mid / 2;
        hi = (mid + hi) / 2;
      } else if (s == s0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    // shrink until no integer lies strictly inside
    for (;;) {
      const BigRational k(BigInt(floor(lo) + 1));
      if (k >= hi) break;
      const int sl = sgn(evaluate(mr, lo));
      const int sk = sgn(evaluate(mr, k));
      if (sl == 0 || sk == 0) break;
      if (sk == sl) {
        lo = k;
      } else {
        hi = k;
      }
    }
    out.emplace_back(m, lo, hi, static_cast<int>(out.size()));
  }
  return out;
}

int sign_at_root(const RatPolynomial& g, const AlgebraicNumber& alpha) {
  if (g.is_zero()) return 0;
  if (auto q = alpha.as_rational()) return sgn(evaluate(g, *q));
  const RatPolynomial r = rem(g, to_rational(alpha.min_poly()));
  if (r.is_zero()) return 0;
  // the content is positive, so the primitive part has the same sign
  const IntPolynomial rp = content_primitive(r).primitive;
  const IntPolynomial h = poly_gcd(rp, alpha.min_poly());
  if (h.degree() >= 1 && sgn(evaluate(h, alpha.lo())) * sgn(evaluate(h, alpha.hi())) < 0) return 0;
  AlgebraicNumber a = alpha;
  for (;;) {
    if (auto s = interval_sign(rp, a.lo(), a.hi())) return *s;
    a = a.refined();
  }
}

int sign_at_root(const IntPolynomial& g, const AlgebraicNumber& alpha) {
  return sign_at_root(to_rational(g), alpha);
}

unsigned long floor_log(const RatPolynomial& v, const AlgebraicNumber& alpha) {
  if (sign_at_root(IntPolynomial{BigInt(-1), BigInt(1)}, alpha) <= 0)
    throw DomainError("no finite exponent bound: alpha <= 1");
  if (sign_at_root(v - RatPolynomial::constant(BigRational(1)), alpha) < 0)
    throw DomainError("floor_log needs a value >= 1");
  unsigned long k = 0;
  while (sign_at_root(v - RatPolynomial::monomial(BigRational(1), k + 1), alpha) >= 0) ++k;
  return k;
}

SignOracle::SignOracle(const AlgebraicNumber& alpha) : alpha_(alpha) {}

int SignOracle::sign(const std::vector<BigInt>& coords) {
  const IntPolynomial g(coords);
  if (g.is_zero()) return 0;
  if (auto q = alpha_.as_rational()) return sgn(evaluate(g, *q));
  if (g.degree() >= alpha_.degree()) return sign_at_root(g, alpha_);
  // below the degree of an irreducible minimal polynomial, g(alpha) != 0
  for (;;) {
    if (auto s = interval_sign(g, alpha_.lo(), alpha_.hi())) return *s;
    alpha_ = alpha_.refined();
  }
}

std::string decimal_string(const BigRational& q, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt t = floor(q * scale);
  const bool negative = t < 0;
  const BigInt a = abs(t);
  std::string frac = BigInt(a % scale).get_str();
  if (static_cast<int>(frac.size()) < digits) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = (negative ? "-" : "") + BigInt(a / scale).get_str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace mfactor
