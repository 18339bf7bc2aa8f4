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

// The checked int64 kernel against the GMP kernel, on identical problems.

#include <doctest.h>

#include "engine.hpp"
#include "generators.hpp"
#include "mfactor/errors.hpp"

using namespace mfactor;
using namespace mfactor::detail;

namespace {

struct Case {
  MonoidSpec spec;
  unsigned D;
  std::optional<std::uint64_t> cap;
};

}  // namespace

TEST_CASE("int64 and big kernels agree") {
  testing::Gen g(51);
  const std::vector<Case> cases = {
      {make_rational_spec(parse_rational("3/2")), 6, std::nullopt},
      {make_rational_spec(parse_rational("5/3")), 5, std::nullopt},
      {make_rational_spec(parse_rational("2/3")), 5, 6},
      {make_root_spec(parse_rational("5/2"), 2), 5, std::nullopt},
      {make_algebraic_spec(parse_int_polynomial("x^4 - x^3 - x^2 - x + 1")), 8, std::nullopt},
      {make_algebraic_spec(parse_int_polynomial("x^4 - 6x^3 + 4x^2 - 2x - 2")), 5, std::nullopt},
      {make_algebraic_spec(parse_int_polynomial("3x^2 - 2")), 6, 5},
  };
  std::size_t compared = 0;
  for (const auto& c : cases) {
    const Problem p(c.spec, c.spec.atom_exponents(c.D), c.D, c.cap);
    Searcher small(p, Kernel::Int64), big(p, Kernel::Big);
    for (int t = 0; t < 15; ++t) {
      const auto x = g.element(static_cast<unsigned>(g.integer(0, c.D)), 4);
      const auto target = p.scale(canonicalize(x, c.spec).coords);
      REQUIRE(target);
      SearchLimits lim;
      lim.node_budget = 200000;
      const auto a = small.search(*target, lim);
      const auto b = big.search(*target, lim);
      CAPTURE(describe(c.spec));
      CAPTURE(to_string(x));
      CHECK(a.solutions == b.solutions);
      CHECK(a.budget_exhausted == b.budget_exhausted);
      CHECK(a.nodes == b.nodes);
      const auto la = small.lengths(*target, 200000);
      const auto lb = big.lengths(*target, 200000);
      CHECK(la.lengths == lb.lengths);
      CHECK(la.states == lb.states);
      ++compared;
    }
  }
  CHECK(compared == 105);
}

TEST_CASE("auto falls back to big integers on overflow") {
  // 2^62 scaled by 2^4 overflows the int64 tables; the counts still fit
  const auto spec = make_rational_spec(parse_rational("3/2"));
  const unsigned D = 4;
  const Problem p(spec, spec.atom_exponents(D), D, std::nullopt);
  CanonicalValue huge{{BigRational(BigInt("4611686018427387904"))}};
  const auto target = p.scale(huge.coords);
  REQUIRE(target);
  SearchLimits lim;
  lim.max_results = 1;
  CHECK_THROWS_AS(search(p, *target, lim, Kernel::Int64), UnsupportedError);
  const auto a = search(p, *target, lim, Kernel::Auto);
  const auto b = search(p, *target, lim, Kernel::Big);
  CHECK(a.solutions == b.solutions);
  CHECK(a.solutions.size() == 1);
}
