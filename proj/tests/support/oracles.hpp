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

// Slow, independent reference computations for the test suites. Nothing here
// calls the library's search engine.

#ifndef MFACTOR_TESTS_ORACLES_HPP
#define MFACTOR_TESTS_ORACLES_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "mfactor/exact.hpp"
#include "mfactor/factorize.hpp"

namespace mfactor::testing {

/// All z with z - x = m * r for some r in Z[X], deg z <= D, every
/// coefficient of z in [0, cap] and supported on `allowed`.
/// r is found top coefficient first: each choice fixes one coefficient of z.
/// m must be primitive; x must have degree <= D.
std::vector<Factorization> lattice_oracle(const IntPolynomial& m, const IntPolynomial& x, unsigned D,
                                          std::uint64_t cap, const std::vector<unsigned>& allowed);

std::set<std::uint64_t> oracle_lengths(const std::vector<Factorization>& z);

/// Distance recomputed from the definition on sparse exponent maps.
std::uint64_t naive_distance(const Factorization& a, const Factorization& b);

/// Least N whose threshold graph (edges of distance <= N) on z is connected.
std::uint64_t threshold_catenary(const std::vector<Factorization>& z);

/// Number of connected components of the gcd != 0 graph, by BFS on pairs.
std::size_t naive_betti_components(const std::vector<Factorization>& z);

/// Coefficient-wise evaluation of a nonnegative polynomial at a rational.
BigRational eval_rational(const IntPolynomial& f, const BigRational& q);

/// Lengths of n in N0[q] for rational q = a/b by direct recursion on the
/// number of copies of q^k: n = sum c_k q^k with c_k <= cap.
std::set<std::uint64_t> rational_lengths(const BigRational& value, const BigRational& q, unsigned D,
                                         std::uint64_t cap);

}  // namespace mfactor::testing

#endif  // MFACTOR_TESTS_ORACLES_HPP
