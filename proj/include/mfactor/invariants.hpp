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

// gcd, distance, catenary degree, Betti graphs, AP/AAP structure, furcus
// witnesses, and the monoid scans built on them.

#ifndef MFACTOR_INVARIANTS_HPP
#define MFACTOR_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mfactor/factorize.hpp"

namespace mfactor {

/// Exponent-wise minimum.
Factorization fact_gcd(const Factorization& a, const Factorization& b);
/// max(|a| - |gcd|, |b| - |gcd|)
std::uint64_t distance(const Factorization& a, const Factorization& b);

/// Bottleneck of a minimum spanning tree of the complete distance graph;
/// 0 for fewer than two factorizations.
std::uint64_t catenary_of(const std::vector<Factorization>& z);

struct CatenaryResult {
  std::uint64_t value = 0;
  bool complete = false;  ///< false: a lower-bound estimate from a partial set
  std::size_t factorizations = 0;
};

CatenaryResult catenary_element(const ElementExpr& x, const MonoidSpec& spec, const Bounds& bounds = {});
CatenaryResult catenary_element(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds = {});

/// Components of the graph on z with an edge when the gcd is nonzero;
/// each component keeps the input order, components ordered by first member.
std::vector<std::vector<Factorization>> betti_components(const std::vector<Factorization>& z);

struct BettiReport {
  CanonicalValue element;
  std::vector<std::vector<Factorization>> components;
  bool is_betti = false;
  bool complete = false;
};

BettiReport betti_graph(const ElementExpr& x, const MonoidSpec& spec, const Bounds& bounds = {});
BettiReport betti_graph(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds = {});

/// S = c + (S' u S* u S'') with S* = {0, d, ..., sup S*}, S' in [-N, -1],
/// S'' in sup S* + [1, N], everything inside c + dZ. Members are stored
/// relative to c.
struct AapDecomposition {
  std::int64_t c = 0;
  std::uint64_t d = 1;
  std::uint64_t N = 0;
  std::vector<std::int64_t> s_prime;
  std::vector<std::int64_t> s_star;
  std::vector<std::int64_t> s_double;
};

std::optional<AapDecomposition> aap_decompose(const std::vector<std::uint64_t>& S, std::uint64_t d,
                                              std::uint64_t N);

struct LengthSetReport {
  LengthSet lengths;
  bool is_ap = false;
  std::optional<std::uint64_t> difference;  ///< set when is_ap and |S| >= 2
  std::optional<AapDecomposition> aap;
  bool complete = false;
};

/// AP test plus AAP decomposition for the caller's (d, N).
LengthSetReport ap_aap_analyze(const LengthSet& S, std::uint64_t d, std::uint64_t N);
/// AP test plus the smallest (N, d) AAP with d <= max gap and N <= max_N.
LengthSetReport ap_aap_infer(const LengthSet& S, std::uint64_t max_N);

struct FurcusWitness {
  bool found = false;
  std::optional<ElementExpr> expr;
  CanonicalValue element;
  LengthSet lengths;  ///< certificate: the full length set
  std::uint64_t candidates = 0;
};

inline constexpr std::uint64_t kDefaultFurcusBudget = 2000;

/// First candidate x with min L(x) > k: naturals 1..budget, then small
/// expressions. None found is not a disproof.
FurcusWitness furcus_witness(const MonoidSpec& spec, std::uint64_t k, std::uint64_t budget = kDefaultFurcusBudget,
                             const Bounds& bounds = {});

// ---- monoid scans

struct ScanOptions {
  unsigned max_exponent = 4;          ///< support within 0..max_exponent
  std::uint64_t max_coefficient = 4;  ///< coefficients within 0..max_coefficient
  Bounds bounds;                      ///< per element; D and cap required when alpha <= 1
  unsigned workers = 0;               ///< 0 = hardware concurrency
};

struct ScannedElement {
  CanonicalValue value;
  ElementExpr expr;  ///< first expression reaching the value
};

/// Distinct nonzero values of the scan expressions, by increasing real value
/// (ties broken on coordinates).
std::vector<ScannedElement> scan_elements(const MonoidSpec& spec, unsigned max_exponent,
                                          std::uint64_t max_coefficient);

struct CatenaryScanResult {
  std::uint64_t observed_sup = 0;
  std::optional<ScannedElement> argmax;
  std::map<std::uint64_t, std::size_t> histogram;  ///< c(x) -> count
  std::optional<std::uint64_t> formula;  ///< max(n, d) for non-integer rational q
  bool formula_holds = true;             ///< observed_sup <= formula
  std::size_t elements = 0;
  bool complete = false;
};

CatenaryScanResult catenary_monoid_scan(const MonoidSpec& spec, const ScanOptions& opts = {});

struct BettiScanResult {
  std::vector<ScannedElement> betti;        ///< found, scan order
  std::vector<ScannedElement> formula;      ///< predicted family members inside the scan
  bool formula_matches = false;
  bool has_formula = false;
  std::size_t elements = 0;
  bool complete = false;
};

/// Betti test per element through the atom graph: atoms j with x - a_j in M,
/// joined when x - a_j - a_k is in M. Its components match the Betti graph's.
BettiScanResult betti_scan(const MonoidSpec& spec, const ScanOptions& opts = {});

/// n^(m+1)/d^m * alpha^r with the exponents in range, as canonical values;
/// r ranges over 0..n-1 for roots and is 0 for rationals.
std::vector<CanonicalValue> betti_family(const MonoidSpec& spec, unsigned max_m);

}  // namespace mfactor

#endif  // MFACTOR_INVARIANTS_HPP
