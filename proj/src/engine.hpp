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

// Factorization search over scaled integer coordinates.
//
// Every alpha^k is a vector v_k = L * coords(alpha^k) in Z^e. The search
// assigns coefficients from the highest generator down. At generator i the
// residual must stay in the lattice and in the cone spanned by the lower
// generators; when v_i lies in their span the admissible coefficients form
// one residue class modulo the lattice index, otherwise they are unique.

#ifndef MFACTOR_ENGINE_HPP
#define MFACTOR_ENGINE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lattice.hpp"
#include "mfactor/factorize.hpp"

namespace mfactor::detail {

/// coords(alpha^k) for k = 0..D.
std::vector<std::vector<BigRational>> power_coordinates(const IntPolynomial& min_poly, unsigned D);

inline constexpr std::size_t kFacetCombinationLimit = 200000;

struct Level {
  unsigned exponent = 0;
  Vec v;
  bool cyclic = false;
  BigInt period = 1;  ///< lattice index of the lower generators inside lower + v (cyclic)
  Vec y;              ///< functional vanishing on the lower span (unique)
  BigInt yv = 0;
  Hnf lower;
  bool has_facets = false;
  std::vector<Vec> facets;
  std::optional<BigInt> cap;
};

class Problem {
 public:
  /// Generators alpha^k for k in `exponents` (increasing); scale covers
  /// every expression with exponents <= table_degree and the extra denominator.
  Problem(const MonoidSpec& spec, std::vector<unsigned> exponents, unsigned table_degree,
          std::optional<std::uint64_t> cap, const BigInt& extra_denominator = 1);

  /// Scaled target; nullopt when it is not integral at this scale (then no
  /// factorization within the generators exists).
  std::optional<Vec> scale(const std::vector<BigRational>& coords) const;

  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  const AlgebraicNumber& alpha() const { return alpha_; }
  std::size_t dim() const { return dim_; }
  const BigInt& scale_factor() const { return scale_; }
  const Hnf& top_lattice() const { return top_; }
  unsigned table_degree() const { return table_degree_; }

 private:
  AlgebraicNumber alpha_;
  std::size_t dim_;
  unsigned table_degree_;
  BigInt scale_;
  std::vector<unsigned> exponents_;
  std::vector<Level> levels_;
  Hnf top_;
};

enum class Kernel { Auto, Int64, Big };

struct SearchLimits {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t max_results = 0;
};

struct SearchOutcome {
  std::vector<std::vector<std::uint64_t>> solutions;  ///< coefficient per generator index
  bool budget_exhausted = false;
  bool truncated = false;
  std::uint64_t nodes = 0;
};

SearchOutcome search(const Problem& p, const Vec& target, const SearchLimits& limits, Kernel kernel = Kernel::Auto);

struct LengthOutcome {
  LengthSet lengths;
  bool budget_exhausted = false;
  std::uint64_t states = 0;
};

LengthOutcome search_lengths(const Problem& p, const Vec& target, std::uint64_t budget,
                             Kernel kernel = Kernel::Auto);

/// Reuses converted search tables across many targets of one Problem.
/// Not thread-safe; the Problem must outlive it.
class Searcher {
 public:
  explicit Searcher(const Problem& p, Kernel kernel = Kernel::Auto);
  ~Searcher();
  Searcher(const Searcher&) = delete;
  Searcher& operator=(const Searcher&) = delete;

  SearchOutcome search(const Vec& target, const SearchLimits& limits);
  LengthOutcome lengths(const Vec& target, std::uint64_t budget);
  const Problem& problem() const { return p_; }

 private:
  struct Kernels;
  template <class R, class F>
  R dispatch(F&& f);

  const Problem& p_;
  Kernel kernel_;
  std::unique_ptr<Kernels> k_;
};

}  // namespace mfactor::detail

#endif  // MFACTOR_ENGINE_HPP
