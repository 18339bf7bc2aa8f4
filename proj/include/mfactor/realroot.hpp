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

// Positive real roots of integer polynomials, pinned by rational isolating
// intervals, and exact sign decisions at such roots.

#ifndef MFACTOR_REALROOT_HPP
#define MFACTOR_REALROOT_HPP

#include <string>
#include <vector>

#include "mfactor/exact.hpp"

namespace mfactor {

/// A positive real root of `min_poly`, the only root in the open interval
/// (lo, hi), with 0 < lo < hi. Values are immutable; refinement returns a
/// new number designating the same root.
class AlgebraicNumber {
 public:
  AlgebraicNumber(IntPolynomial min_poly, BigRational lo, BigRational hi, int root_index);

  /// The rational n/d as the root of dX - n. Requires q > 0.
  static AlgebraicNumber rational(const BigRational& q);

  const IntPolynomial& min_poly() const { return min_poly_; }
  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }
  /// Position among the positive roots of min_poly, counting from 0 upwards.
  int root_index() const { return root_index_; }
  int degree() const { return min_poly_.degree(); }

  /// Exact value when min_poly is linear.
  std::optional<BigRational> as_rational() const;

  /// One bisection step.
  AlgebraicNumber refined() const;
  /// Refines until hi - lo <= width.
  AlgebraicNumber refined_to(const BigRational& width) const;

  /// Decimal approximation with `digits` digits after the point (display only).
  std::string decimal(int digits = 6) const;

 private:
  IntPolynomial min_poly_;
  BigRational lo_;
  BigRational hi_;
  int root_index_;
};

/// Isolating intervals for every positive real root of m, increasing.
/// Throws DomainError for the zero polynomial or when gcd(m, m') != 1.
std::vector<AlgebraicNumber> isolate_positive_roots(const IntPolynomial& m);

/// Sign of g(alpha): 0 exactly when g(alpha) = 0, decided through the gcd
/// with the minimal polynomial; otherwise by interval refinement.
int sign_at_root(const IntPolynomial& g, const AlgebraicNumber& alpha);
int sign_at_root(const RatPolynomial& g, const AlgebraicNumber& alpha);

/// Largest k with alpha^k <= v(alpha). Throws DomainError when alpha <= 1
/// (no finite exponent bound) or when v(alpha) < 1.
unsigned long floor_log(const RatPolynomial& v, const AlgebraicNumber& alpha);

/// Sign of sum coords[i] * alpha^i for coordinate vectors of length
/// deg min_poly. Keeps its own refined interval, so one oracle must not be
/// shared between threads; copies are independent.
class SignOracle {
 public:
  explicit SignOracle(const AlgebraicNumber& alpha);
  int sign(const std::vector<BigInt>& coords);
  const AlgebraicNumber& alpha() const { return alpha_; }

 private:
  AlgebraicNumber alpha_;
};

/// Text "a.bcdef" of the rational q, truncated toward -inf at `digits` places.
std::string decimal_string(const BigRational& q, int digits);

}  // namespace mfactor

#endif  // MFACTOR_REALROOT_HPP
