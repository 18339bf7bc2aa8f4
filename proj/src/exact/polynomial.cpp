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

#include <sstream>

#include "mfactor/exact.hpp"

namespace mfactor {

BigRational make_rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DomainError("division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor(const BigRational& q) { return floor_div(q.get_num(), q.get_den()); }

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<BigRational> v;
  v.reserve(f.size());
  for (const auto& c : f.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

IntPolynomial to_integer(const RatPolynomial& f) {
  std::vector<BigInt> v;
  v.reserve(f.size());
  for (const auto& c : f.coefficients()) {
    if (!is_integer(c)) throw DomainError("non-integer coefficient " + to_string(c));
    v.push_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

DivRem divrem(const RatPolynomial& f, const RatPolynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<BigRational> r(f.coefficients());
  const int dg = g.degree();
  const int df = f.degree();
  if (df < dg) return {RatPolynomial{}, f};
  std::vector<BigRational> q(static_cast<std::size_t>(df - dg + 1));
  const BigRational& lead = g.leading();
  for (int i = df; i >= dg; --i) {
    const BigRational c = r[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j)
      r[static_cast<std::size_t>(i - dg + j)] -= c * g.coefficients()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(dg));
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

DivRem divrem(const IntPolynomial& f, const IntPolynomial& g) {
  return divrem(to_rational(f), to_rational(g));
}

RatPolynomial rem(const RatPolynomial& f, const RatPolynomial& g) { return divrem(f, g).rem; }

bool divides(const IntPolynomial& g, const IntPolynomial& f) { return divrem(f, g).rem.is_zero(); }

ContentPrimitive content_primitive(const IntPolynomial& f) {
  if (f.is_zero()) throw DomainError("content of the zero polynomial");
  BigInt g = 0;
  for (const auto& c : f.coefficients()) g = gcd(g, c);
  std::vector<BigInt> v;
  v.reserve(f.size());
  for (const auto& c : f.coefficients()) v.push_back(c / g);
  return {BigRational(g), IntPolynomial(std::move(v))};
}

ContentPrimitive content_primitive(const RatPolynomial& f) {
  if (f.is_zero()) throw DomainError("content of the zero polynomial");
  BigInt den = 1;
  for (const auto& c : f.coefficients()) den = lcm(den, c.get_den());
  std::vector<BigInt> scaled;
  scaled.reserve(f.size());
  for (const auto& c : f.coefficients()) scaled.push_back(c.get_num() * (den / c.get_den()));
  auto cp = content_primitive(IntPolynomial(std::move(scaled)));
  return {make_rational(cp.content.get_num(), den), std::move(cp.primitive)};
}

IntPolynomial normalize_primitive(const IntPolynomial& f) {
  auto p = content_primitive(f).primitive;
  return p.leading() < 0 ? -p : p;
}

IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() && g.is_zero()) return {};
  RatPolynomial a = to_rational(f);
  RatPolynomial b = to_rational(g);
  while (!b.is_zero()) {
    RatPolynomial r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return normalize_primitive(content_primitive(a).primitive);
}

IntPolynomial derivative(const IntPolynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<BigInt> v(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) v[i - 1] = f.coefficients()[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

RatPolynomial derivative(const RatPolynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<BigRational> v(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) v[i - 1] = f.coefficients()[i] * static_cast<unsigned long>(i);
  return RatPolynomial(std::move(v));
}

BigInt eval_at_one(const IntPolynomial& f) {
  BigInt s = 0;
  for (const auto& c : f.coefficients()) s += c;
  return s;
}

BigRational evaluate(const RatPolynomial& f, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational evaluate(const IntPolynomial& f, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) acc = acc * x + BigRational(*it);
  return acc;
}

RatPolynomial taylor_shift(const RatPolynomial& f, const BigRational& shift) {
  // Horner in the polynomial ring: acc = acc*(X + shift) + c
  std::vector<BigRational> acc;
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) {
    acc.emplace_back(0);
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i - 1] + shift * acc[i];
    acc[0] = shift * acc[0] + *it;
  }
  return RatPolynomial(std::move(acc));
}

namespace {

template <class T>
std::string poly_text(const Polynomial<T>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const T& c = f.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const T mag = negative ? T(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out << to_string(mag);
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntPolynomial& f) { return poly_text(f); }
std::string to_string(const RatPolynomial& f) { return poly_text(f); }

}  // namespace mfactor
