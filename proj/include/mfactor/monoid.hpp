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

// Described monoids N0[alpha]: construction routes, minimal pairs,
// classification flags and atoms.

#ifndef MFACTOR_MONOID_HPP
#define MFACTOR_MONOID_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mfactor/exact.hpp"
#include "mfactor/realroot.hpp"

namespace mfactor {

enum class Route { RationalCyclic, IrreducibleRoot, AlgebraicEval };
std::string to_string(Route r);

enum class AtomKind {
  AllPowers,       ///< every alpha^k is an atom
  FiniteList,      ///< exactly the listed exponents
  BoundedUnknown,  ///< alpha^k is an atom for every k <= verified_through; beyond that unknown
};
std::string to_string(AtomKind k);

struct AtomDescription {
  AtomKind kind = AtomKind::BoundedUnknown;
  std::vector<unsigned> exponents;  ///< FiniteList only, increasing
  int verified_through = -1;        ///< BoundedUnknown only; -1 when nothing is verified
};

enum class Provenance { CitedRule, Computed, Unknown };
std::string to_string(Provenance p);

struct Flag {
  std::optional<bool> value;
  Provenance provenance = Provenance::Unknown;
  std::string rule;  ///< short reason, empty when unknown
};

struct Classification {
  Flag atomic;
  Flag bfm;
  Flag accp;
  Flag ufm;
};

struct MinimalPair {
  IntPolynomial p;
  IntPolynomial q;
};

/// Lazily extended atom knowledge for alpha > 1 (internal, thread-safe).
struct AtomCache {
  std::mutex mutex;
  int verified_through = -1;
  std::optional<unsigned> first_non_atom;
};

struct MonoidSpec {
  Route route = Route::AlgebraicEval;
  BigRational q;   ///< RationalCyclic and IrreducibleRoot
  unsigned n = 1;  ///< IrreducibleRoot root order
  IntPolynomial min_poly;  ///< primitive, positive leading coefficient
  AlgebraicNumber alpha = AlgebraicNumber::rational(BigRational(1));
  int rank = 1;
  bool alpha_gt_one = false;
  AtomDescription atoms;
  Classification classification;
  IrreducibilityResult irreducibility;
  std::shared_ptr<AtomCache> cache;

  /// True when every alpha^k with k <= bound is known to be an atom or not.
  bool atoms_known_through(unsigned bound) const;
  /// Atom exponents in [0, bound]; extends BoundedUnknown knowledge when
  /// alpha > 1. Throws UnsupportedError when atoms cannot be determined.
  std::vector<unsigned> atom_exponents(unsigned bound) const;
  /// Whether atom_exponents can be called at all (atomic, atoms describable).
  bool supports_enumeration() const;
};

/// N0[q] for rational q > 0.
MonoidSpec make_rational_spec(const BigRational& q);
/// N0[q^(1/n)] for rational q > 0, n >= 2, X^n - q irreducible.
MonoidSpec make_root_spec(const BigRational& q, unsigned n);
/// N0[alpha] for the root_index-th positive root (increasing) of an
/// irreducible min_poly; the largest positive root when root_index is empty.
MonoidSpec make_algebraic_spec(const IntPolynomial& min_poly, std::optional<int> root_index = std::nullopt);

MinimalPair minimal_pair(const MonoidSpec& spec);

/// Applies the cited rules; never guesses beyond them.
Classification classify(const MonoidSpec& spec);

struct AtomVerdict {
  unsigned exponent = 0;
  bool is_atom = true;
  bool definitive = false;           ///< false means "atom within bound"
  std::vector<std::uint64_t> refutation;  ///< counts by exponent of a different factorization
  std::string certificate;
};

/// Atom verdicts for alpha^0 .. alpha^K.
std::vector<AtomVerdict> atoms_up_to(const MonoidSpec& spec, unsigned K);

/// Exponent probe used for AlgebraicEval specs with alpha > 1.
inline constexpr unsigned atom_probe_bound(int rank) { return static_cast<unsigned>(2 * rank + 4); }

/// Short one-line description, e.g. "N0[3/2]".
std::string describe(const MonoidSpec& spec);

}  // namespace mfactor

#endif  // MFACTOR_MONOID_HPP
