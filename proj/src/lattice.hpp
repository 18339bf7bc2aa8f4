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

// Integer lattices and rational cones spanned by small sets of vectors.

#ifndef MFACTOR_LATTICE_HPP
#define MFACTOR_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mfactor/exact.hpp"

namespace mfactor::detail {

using Vec = std::vector<BigInt>;

/// Row Hermite normal form: rows in echelon form, pivot entries positive,
/// entries above each pivot reduced into [0, pivot).
struct Hnf {
  std::size_t dim = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Hnf hermite_normal_form(const std::vector<Vec>& gens, std::size_t dim);

/// Membership of w in the lattice spanned by the rows.
bool lattice_contains(const Hnf& h, Vec w);

/// Product of pivot entries; the index ratio of two lattices with one span.
BigInt pivot_product(const Hnf& h);

/// Whether v lies in the rational span of the rows.
bool in_span(const Hnf& h, const Vec& v);

/// An integer y orthogonal to the span of the rows with y.v > 0.
/// Requires v outside that span.
Vec orthogonal_witness(const Hnf& h, const Vec& v);

/// Inequalities n.r >= 0 describing cone(gens) inside the span of `h`
/// (which must be the lattice of gens). Normals are primitive and padded
/// with zeros outside the pivot coordinates. Returns nullopt when more than
/// `combination_limit` subsets would have to be examined.
std::optional<std::vector<Vec>> cone_facets(const std::vector<Vec>& gens, const Hnf& h,
                                            std::size_t combination_limit);

BigInt dot(const Vec& a, const Vec& b);

/// Determinant by fraction-free elimination.
BigInt determinant(std::vector<Vec> m);

}  // namespace mfactor::detail

#endif  // MFACTOR_LATTICE_HPP
