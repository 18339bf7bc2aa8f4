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

// Factorizations over N0[q^(1/n)] as n-tuples of factorizations over N0[q]:
// alpha^(kn + r) = alpha^r q^k goes to component r.

#ifndef MFACTOR_ROOTLIFT_HPP
#define MFACTOR_ROOTLIFT_HPP

#include <vector>

#include "mfactor/invariants.hpp"

namespace mfactor {

struct LiftedFactorization {
  std::vector<Factorization> components;  ///< indexed by residue r = 0..n-1
  std::uint64_t length() const;
  friend bool operator==(const LiftedFactorization&, const LiftedFactorization&) = default;
};

LiftedFactorization split_factorization(const Factorization& z, unsigned n);
Factorization join_factorization(const LiftedFactorization& z);

/// The rank-1 spec N0[q] underlying an IrreducibleRoot spec.
MonoidSpec base_spec(const MonoidSpec& root_spec);

struct LiftedLengths {
  LengthSet lengths;
  std::vector<LengthSet> components;  ///< L(t_r) in N0[q]
  bool complete = false;
};

/// L(b) as the sumset of L(t_0), ..., L(t_{n-1}) over N0[q], where t_r are
/// the coordinates of b. Throws DomainError when some t_r is outside N0[q].
/// `bounds` applies to each rank-1 computation.
LiftedLengths lifted_length_set(const CanonicalValue& b, const MonoidSpec& spec, const Bounds& bounds = {});
LiftedLengths lifted_length_set(const ElementExpr& b, const MonoidSpec& spec, const Bounds& bounds = {});

struct LiftedBettiElement {
  unsigned m = 0;
  unsigned r = 0;
  CanonicalValue value;
  BettiReport direct;  ///< betti_graph on the root spec
};

/// n(q)^(m+1)/d(q)^m alpha^r for m <= max_m and every r, each checked by a
/// direct Betti graph over N0[alpha].
std::vector<LiftedBettiElement> lifted_betti(const MonoidSpec& spec, unsigned max_m, const Bounds& bounds = {});

}  // namespace mfactor

#endif  // MFACTOR_ROOTLIFT_HPP
