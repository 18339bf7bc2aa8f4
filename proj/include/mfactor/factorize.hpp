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

// Elements of N0[alpha], their canonical values, and factorization sets.

#ifndef MFACTOR_FACTORIZE_HPP
#define MFACTOR_FACTORIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfactor/monoid.hpp"

namespace mfactor {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// A formal N0[X] expression p, denoting p(alpha).
class ElementExpr {
 public:
  ElementExpr() = default;
  /// Throws DomainError on a negative coefficient.
  explicit ElementExpr(IntPolynomial poly);
  static ElementExpr parse(std::string_view text);
  /// alpha^k
  static ElementExpr atom(unsigned k);
  static ElementExpr natural(std::uint64_t n);

  const IntPolynomial& poly() const { return poly_; }

 private:
  IntPolynomial poly_;
};

/// Coordinates of an element in the basis 1, alpha, ..., alpha^(e-1).
struct CanonicalValue {
  std::vector<BigRational> coords;
  friend bool operator==(const CanonicalValue&, const CanonicalValue&) = default;
  friend bool operator<(const CanonicalValue& a, const CanonicalValue& b) { return a.coords < b.coords; }
};

/// Multiset of atoms alpha^k: counts indexed by exponent, trailing zeros trimmed.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<std::uint64_t> counts);
  /// From [exponent, count] pairs.
  static Factorization from_pairs(const std::vector<std::pair<unsigned, std::uint64_t>>& pairs);

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t count(unsigned k) const { return k < counts_.size() ? counts_[k] : 0; }
  std::uint64_t length() const { return length_; }
  bool empty() const { return counts_.empty(); }
  /// Sorted [exponent, count] pairs with positive counts.
  std::vector<std::pair<unsigned, std::uint64_t>> pairs() const;
  IntPolynomial polynomial() const;
  std::string to_string() const;

  friend bool operator==(const Factorization& a, const Factorization& b) { return a.counts_ == b.counts_; }
  friend bool operator<(const Factorization& a, const Factorization& b);

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t length_ = 0;
};

/// Finite set of lengths stored as disjoint closed intervals, increasing.
class LengthSet {
 public:
  LengthSet() = default;
  static LengthSet single(std::uint64_t v);
  static LengthSet from_values(std::vector<std::uint64_t> values);
  /// Closed intervals [a, b] in any order; overlaps are merged.
  static LengthSet from_runs(std::vector<std::pair<std::uint64_t, std::uint64_t>> runs);

  bool empty() const { return runs_.empty(); }
  bool contains(std::uint64_t v) const;
  std::uint64_t min() const { return runs_.front().first; }
  std::uint64_t max() const { return runs_.back().second; }
  std::uint64_t size() const;
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& runs() const { return runs_; }
  std::vector<std::uint64_t> values() const;

  LengthSet shifted(std::uint64_t by) const;
  void unite(const LengthSet& other);
  /// {a + b}
  static LengthSet sumset(const LengthSet& a, const LengthSet& b);
  /// "{2, 5..9}"
  std::string to_string() const;

  friend bool operator==(const LengthSet&, const LengthSet&) = default;

 private:
  std::vector<std::pair<std::uint64_t, std::uint64_t>> runs_;
};

struct Bounds {
  std::optional<unsigned> max_exponent;  ///< D; derived from floor_log when alpha > 1
  std::optional<std::uint64_t> cap;      ///< uniform coefficient cap
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t max_results = 0;         ///< 0 = all
};

struct BoundsUsed {
  unsigned max_exponent = 0;
  std::optional<std::uint64_t> cap;
  std::uint64_t node_budget = 0;
};

struct FactorizationSetResult {
  std::vector<Factorization> factorizations;  ///< sorted
  bool complete = false;
  bool budget_exhausted = false;
  bool truncated = false;  ///< stopped at max_results
  std::uint64_t nodes = 0;
  BoundsUsed bounds_used;
};

struct LengthSetResult {
  LengthSet lengths;
  bool complete = false;
  bool budget_exhausted = false;
  std::uint64_t states = 0;
  BoundsUsed bounds_used;
};

CanonicalValue canonicalize(const ElementExpr& e, const MonoidSpec& spec);
CanonicalValue canonicalize(const IntPolynomial& p, const MonoidSpec& spec);
bool equal_in_monoid(const ElementExpr& a, const ElementExpr& b, const MonoidSpec& spec);

/// Sign of the real number denoted by a canonical value.
int value_sign(const CanonicalValue& v, const MonoidSpec& spec);
/// The canonical value as a polynomial of degree < rank.
RatPolynomial value_polynomial(const CanonicalValue& v);

/// Every factorization of x with exponents in the atom set and [0, D] and
/// coefficients within the cap. Throws UnsupportedError for specs whose
/// atoms cannot be enumerated, and when D is missing while alpha <= 1.
FactorizationSetResult enumerate_factorizations(const ElementExpr& x, const MonoidSpec& spec,
                                                const Bounds& bounds = {});
FactorizationSetResult enumerate_factorizations(const CanonicalValue& x, const MonoidSpec& spec,
                                                const Bounds& bounds = {});

/// Lengths of the same set as enumerate_factorizations, by a memoized
/// recursion over (exponent, residual) that never lists factorizations.
LengthSetResult length_set(const ElementExpr& x, const MonoidSpec& spec, const Bounds& bounds = {});
LengthSetResult length_set(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds = {});

/// Whether x lies in the monoid within the bounds (a single witness suffices).
struct MembershipResult {
  bool member = false;
  bool complete = false;
  std::optional<Factorization> witness;
};
MembershipResult membership(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds = {});

/// Default D: floor_log of the value when alpha > 1 (0 below 1).
/// Throws UnsupportedError when alpha <= 1.
unsigned default_max_exponent(const CanonicalValue& x, const MonoidSpec& spec);

}  // namespace mfactor

#endif  // MFACTOR_FACTORIZE_HPP
