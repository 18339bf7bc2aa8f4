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

#include <doctest.h>

#include "generators.hpp"
#include "mfactor/errors.hpp"
#include "mfactor/rootlift.hpp"
#include "oracles.hpp"

using namespace mfactor;

namespace {

BigRational R(const char* s) { return parse_rational(s); }
ElementExpr E(const char* s) { return ElementExpr::parse(s); }
Factorization F(std::vector<std::pair<unsigned, std::uint64_t>> p) { return Factorization::from_pairs(p); }

std::set<std::uint64_t> to_set(const LengthSet& s) {
  const auto v = s.values();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("split and join") {
  const auto z = F({{0, 1}, {1, 2}, {2, 1}});
  const auto s = split_factorization(z, 2);
  REQUIRE(s.components.size() == 2);
  CHECK(s.components[0] == F({{0, 1}, {1, 1}}));
  CHECK(s.components[1] == F({{0, 2}}));
  CHECK(join_factorization(s) == z);
  CHECK(s.length() == z.length());

  const auto e = split_factorization(Factorization(), 3);
  REQUIRE(e.components.size() == 3);
  for (const auto& c : e.components) CHECK(c.empty());
}

TEST_CASE("property: split and join are inverse and keep length") {
  testing::Gen g(41);
  for (int t = 0; t < 300; ++t) {
    const unsigned n = static_cast<unsigned>(g.integer(1, 4));
    const auto z = g.factorization(static_cast<unsigned>(g.integer(0, 9)), 4);
    const auto s = split_factorization(z, n);
    CHECK(join_factorization(s) == z);
    CHECK(s.length() == z.length());
    CHECK(split_factorization(join_factorization(s), n) == s);
  }
}

TEST_CASE("property: projections agree iff components agree in value") {
  const auto root = make_root_spec(R("3/2"), 2);
  const auto base = base_spec(root);
  testing::Gen g(42);
  int equal_pairs = 0;
  for (int t = 0; t < 200; ++t) {
    // build two factorizations; half the time force equal values component-wise
    auto a = g.factorization(5, 3);
    auto b = g.factorization(5, 3);
    if (g.coin()) {
      // replace 2 alpha^(k+2) by 3 alpha^k in some component of b, keeping each value
      b = a;
      const auto s = split_factorization(b, 2);
      auto comps = s.components;
      for (auto& c : comps) {
        auto counts = c.counts();
        for (std::size_t k = 1; k < counts.size(); ++k)
          if (counts[k] >= 2) {
            counts[k] -= 2;
            counts[k - 1] += 3;
            break;
          }
        c = Factorization(counts);
      }
      b = join_factorization(LiftedFactorization{comps});
    }
    const auto sa = split_factorization(a, 2);
    const auto sb = split_factorization(b, 2);
    bool comp_equal = true;
    for (unsigned r = 0; r < 2; ++r)
      comp_equal = comp_equal && testing::eval_rational(sa.components[r].polynomial(), R("3/2")) ==
                                     testing::eval_rational(sb.components[r].polynomial(), R("3/2"));
    const bool same = equal_in_monoid(ElementExpr(a.polynomial()), ElementExpr(b.polynomial()), root);
    CHECK(same == comp_equal);
    equal_pairs += same;
  }
  CHECK(equal_pairs > 20);
}

TEST_CASE("lifted length sets") {
  const auto root = make_root_spec(R("3/2"), 2);
  const auto a = lifted_length_set(E("3"), root);
  CHECK(a.complete);
  CHECK(a.lengths == LengthSet::from_values({2, 3}));
  CHECK(to_set(a.components[0]) == testing::rational_lengths(3, R("3/2"), 3, 3));

  CHECK(lifted_length_set(E("x"), root).lengths == LengthSet::single(1));

  const auto b = lifted_length_set(E("3x + 3"), root);
  const auto L3 = LengthSet::from_values({2, 3});
  CHECK(b.lengths == LengthSet::sumset(L3, L3));
  CHECK(b.lengths == LengthSet::from_values({4, 5, 6}));
  CHECK(length_set(E("3x + 3"), root).lengths == b.lengths);

  // (1/2, 0) has coordinate 1/2 outside N0[3/2]
  CanonicalValue half{{R("1/2"), 0}};
  CHECK_THROWS_AS(lifted_length_set(half, root), DomainError);
  CHECK_THROWS_AS(lifted_length_set(E("3"), make_rational_spec(R("3/2"))), UnsupportedError);
}

TEST_CASE("property: lifted equals direct and is an AP with difference |n - d|") {
  testing::Gen g(43);
  for (const auto& [q, n] : std::vector<std::pair<const char*, unsigned>>{{"3/2", 2}, {"5/2", 2}, {"5/3", 2}, {"3/2", 3}}) {
    const auto root = make_root_spec(R(q), n);
    const BigInt diff = abs(BigInt(numer(root.q) - denom(root.q)));
    for (int t = 0; t < 10; ++t) {
      const auto x = ElementExpr(g.element(static_cast<unsigned>(g.integer(0, 2 * n)), 3));
      const auto direct = length_set(x, root);
      const auto lift = lifted_length_set(x, root);
      CAPTURE(to_string(x.poly()));
      REQUIRE(direct.complete);
      REQUIRE(lift.complete);
      CHECK(direct.lengths == lift.lengths);
      const auto v = direct.lengths.values();
      for (std::size_t i = 1; i < v.size(); ++i) CHECK(BigInt(static_cast<unsigned long>(v[i] - v[i - 1])) == diff);
    }
  }
}

TEST_CASE("lifted Betti family") {
  const auto root = make_root_spec(R("3/2"), 2);
  const auto fam = lifted_betti(root, 1);
  REQUIRE(fam.size() == 4);
  std::vector<CanonicalValue> want = {{{3, 0}}, {{0, 3}}, {{R("9/2"), 0}}, {{0, R("9/2")}}};
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(std::find(want.begin(), want.end(), fam[i].value) != want.end());
    CHECK(fam[i].direct.is_betti);
  }
  CHECK_FALSE(betti_graph(E("x + 3"), root).is_betti);

  const auto five = lifted_betti(make_root_spec(R("5/2"), 2), 0);
  REQUIRE(five.size() == 2);
  for (const auto& e : five) CHECK(e.direct.is_betti);
}
