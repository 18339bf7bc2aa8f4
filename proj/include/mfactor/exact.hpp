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

// Exact integer, rational and dense univariate polynomial arithmetic.
//
// BigInt and BigRational are the GMP C++ classes. Every BigRational handed
// out by this library is canonical (lowest terms, positive denominator).

#ifndef MFACTOR_EXACT_HPP
#define MFACTOR_EXACT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfactor/errors.hpp"

namespace mfactor {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// n/d in lowest terms. Throws DomainError when d == 0.
BigRational make_rational(const BigInt& n, const BigInt& d = 1);

/// Parses "a" or "a/b" (optional sign, optional surrounding whitespace).
BigRational parse_rational(std::string_view text);

/// Numerator of q in lowest terms.
inline BigInt numer(const BigRational& q) { return q.get_num(); }
/// Denominator of q in lowest terms (always positive).
inline BigInt denom(const BigRational& q) { return q.get_den(); }

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

/// floor(a / b) for b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor(const BigRational& q);
bool is_integer(const BigRational& q);

/// Dense univariate polynomial, coefficients indexed by degree.
/// Trailing zeros are trimmed, so the leading coefficient of a nonzero
/// polynomial is nonzero and the zero polynomial has no coefficients.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
  static Polynomial monomial(T c, std::size_t deg) {
    std::vector<T> v(deg + 1);
    v[deg] = std::move(c);
    return Polynomial(std::move(v));
  }
  /// X
  static Polynomial x() { return monomial(T(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  /// Coefficient of X^i; zero past the degree.
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  /// Exponents with a nonzero coefficient, increasing.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) s.push_back(i);
    return s;
  }

  Polynomial operator-() const {
    std::vector<T> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> v(a.coeffs_);
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

RatPolynomial to_rational(const IntPolynomial& f);
/// Throws DomainError if some coefficient is not an integer.
IntPolynomial to_integer(const RatPolynomial& f);

struct DivRem {
  RatPolynomial quot;
  RatPolynomial rem;
};

/// Division with remainder over Q: f = quot*g + rem, deg rem < deg g.
/// Throws DomainError when g is zero.
DivRem divrem(const RatPolynomial& f, const RatPolynomial& g);
DivRem divrem(const IntPolynomial& f, const IntPolynomial& g);

/// Remainder of f modulo g over Q.
RatPolynomial rem(const RatPolynomial& f, const RatPolynomial& g);

/// True iff g divides f over Q (g nonzero).
bool divides(const IntPolynomial& g, const IntPolynomial& f);

/// Content and primitive part. For an integer polynomial the content is the
/// positive gcd of the coefficients; for a rational one it is the positive
/// rational c with f = c * primitive and primitive in Z[X] of content 1.
/// The primitive part keeps the sign of f. Throws DomainError on zero.
struct ContentPrimitive {
  BigRational content;
  IntPolynomial primitive;
};
ContentPrimitive content_primitive(const IntPolynomial& f);
ContentPrimitive content_primitive(const RatPolynomial& f);

/// Primitive part scaled so the leading coefficient is positive.
IntPolynomial normalize_primitive(const IntPolynomial& f);

/// gcd over Q, returned primitive with positive leading coefficient.
/// gcd(0, 0) is 0.
IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g);

IntPolynomial derivative(const IntPolynomial& f);
RatPolynomial derivative(const RatPolynomial& f);

/// f(1), the sum of the coefficients.
BigInt eval_at_one(const IntPolynomial& f);
BigRational evaluate(const IntPolynomial& f, const BigRational& x);
BigRational evaluate(const RatPolynomial& f, const BigRational& x);

/// f(x + shift)
RatPolynomial taylor_shift(const RatPolynomial& f, const BigRational& shift);

/// Text form in the CLI grammar, e.g. "x^4 - 6x^3 + 4x^2 - 2x - 2".
std::string to_string(const IntPolynomial& f);
std::string to_string(const RatPolynomial& f);

/// Parses the polynomial grammar: terms in `x` (or `X`) with integer or a/b
/// coefficients, caret powers, optional `*`. Throws ParseError.
RatPolynomial parse_polynomial(std::string_view text);
/// Same grammar, but every coefficient must be an integer.
IntPolynomial parse_int_polynomial(std::string_view text);

// --- Irreducibility over Q ---------------------------------------------

enum class IrreducibilityCertificate {
  Linear,            ///< degree one
  RationalRoot,      ///< reducible: a linear factor from the rational root test
  ExplicitFactor,    ///< reducible: factor found by the bounded search
  Eisenstein,        ///< irreducible: Eisenstein at `prime`
  EisensteinReversed,///< irreducible: Eisenstein at `prime` for the reversed polynomial
  Binomial,          ///< irreducible: aX^n - b with b/a not a p-th power for any prime p | n
  ExhaustiveSearch,  ///< irreducible: no factor of degree <= deg/2 within the divisor search
};

std::string to_string(IrreducibilityCertificate c);

struct IrreducibilityResult {
  bool irreducible = false;
  IrreducibilityCertificate certificate = IrreducibilityCertificate::Linear;
  std::optional<IntPolynomial> factor;
  std::optional<BigInt> prime;
};

/// Largest degree the exhaustive factor search accepts.
inline constexpr int kIrreducibilitySearchDegree = 8;

/// Decides irreducibility over Q with a certificate. Fast paths (rational
/// roots, Eisenstein on f and its reversal, binomials) run first; then a
/// Kronecker divisor search with a Landau-Mignotte coefficient filter.
/// Throws DomainError for degree < 1 and UndecidedError when no fast path
/// applies and deg f exceeds `max_search_degree`.
IrreducibilityResult is_irreducible_over_q(const IntPolynomial& f,
                                           int max_search_degree = kIrreducibilitySearchDegree);

/// Re-checks a certificate independently: factors divide, Eisenstein primes
/// satisfy the criterion, binomial exponents are not powers.
bool verify_certificate(const IntPolynomial& f, const IrreducibilityResult& r);

/// If q = r^p for a rational r, returns r.
std::optional<BigRational> rational_root_of(const BigRational& q, unsigned long p);

/// Prime divisors of |n| by trial division (n != 0).
std::vector<BigInt> prime_factors(const BigInt& n);

}  // namespace mfactor

#endif  // MFACTOR_EXACT_HPP
