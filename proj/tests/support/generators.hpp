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

// Seeded random inputs for the property suites.

#ifndef MFACTOR_TESTS_GENERATORS_HPP
#define MFACTOR_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mfactor/factorize.hpp"

namespace mfactor::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

  /// Integer polynomial of exact degree `deg` with coefficients in [lo, hi].
  IntPolynomial int_poly(int deg, std::int64_t lo, std::int64_t hi) {
    std::vector<BigInt> c(deg + 1);
    for (auto& x : c) x = BigInt(static_cast<long>(integer(lo, hi)));
    while (c.back() == 0) c.back() = BigInt(static_cast<long>(integer(lo, hi)));
    return IntPolynomial(std::move(c));
  }

  RatPolynomial rat_poly(int deg, std::int64_t num, std::int64_t den) {
    std::vector<BigRational> c(deg + 1);
    for (auto& x : c) x = make_rational(BigInt(static_cast<long>(integer(-num, num))), BigInt(static_cast<long>(integer(1, den))));
    if (c.back() == 0) c.back() = 1;
    return RatPolynomial(std::move(c));
  }

  /// Nonzero N0[X] element with exponents <= max_exp.
  IntPolynomial element(unsigned max_exp, std::int64_t max_coef) {
    std::vector<BigInt> c(max_exp + 1);
    for (auto& x : c) x = BigInt(static_cast<long>(integer(0, max_coef)));
    bool any = false;
    for (const auto& x : c) any = any || x != 0;
    if (!any) c[static_cast<std::size_t>(integer(0, max_exp))] = 1;
    return IntPolynomial(std::move(c));
  }

  Factorization factorization(unsigned max_exp, std::uint64_t max_count) {
    std::vector<std::uint64_t> c(max_exp + 1);
    for (auto& x : c) x = static_cast<std::uint64_t>(integer(0, static_cast<std::int64_t>(max_count)));
    return Factorization(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mfactor::testing

#endif  // MFACTOR_TESTS_GENERATORS_HPP
