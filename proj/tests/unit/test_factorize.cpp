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

#include <algorithm>

#include "generators.hpp"
#include "mfactor/errors.hpp"
#include "mfactor/factorize.hpp"
#include "oracles.hpp"

using namespace mfactor;

namespace {

IntPolynomial P(const char* s) { return parse_int_polynomial(s); }
BigRational R(const char* s) { return parse_rational(s); }
ElementExpr E(const char* s) { return ElementExpr::parse(s); }

const MonoidSpec& eisenstein() {
  static const auto s = make_algebraic_spec(P("x^4 - 6x^3 + 4x^2 - 2x - 2"));
  return s;
}
const MonoidSpec& quartic() {
  static const auto s = make_algebraic_spec(P("x^4 - x^3 - x^2 - x + 1"));
  return s;
}

std::vector<Factorization> facts(std::initializer_list<const char*> polys) {
  std::vector<Factorization> v;
  for (const auto* p : polys) {
    const auto f = P(p);
    std::vector<std::uint64_t> c(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) c[k] = f.coeff(k).get_ui();
    v.emplace_back(std::move(c));
  }
  std::sort(v.begin(), v.end());
  return v;
}

// value of x at the upper end of the isolating interval bounds every coefficient
std::uint64_t coefficient_ceiling(const IntPolynomial& x, const MonoidSpec& s) {
  return floor(testing::eval_rational(x, s.alpha.refined_to(make_rational(1, 1000)).hi())).get_ui() + 1;
}

}  // namespace

TEST_CASE("factorization ordering and text") {
  const auto z = Factorization::from_pairs({{0, 3}, {2, 1}});
  CHECK(z.length() == 4);
  CHECK(z.to_string() == "x^2 + 3");
  CHECK(z.polynomial() == P("x^2 + 3"));
  CHECK(Factorization::from_pairs({{1, 2}}).to_string() == "2x");
  CHECK(Factorization({0, 0, 0}) == Factorization());
}

TEST_CASE("length sets") {
  const auto a = LengthSet::from_values({2, 3});
  CHECK(LengthSet::sumset(a, a) == LengthSet::from_values({4, 5, 6}));
  const auto b = LengthSet::from_values({7, 17, 22, 18, 8});
  CHECK(b.to_string() == "{7, 8, 17, 18, 22}");
  CHECK(b.runs().size() == 3);
  CHECK(b.contains(18));
  CHECK_FALSE(b.contains(12));
  CHECK(LengthSet::from_values({3, 4, 5, 6}).to_string() == "{3..6}");
}

TEST_CASE("canonical values") {
  CHECK(canonicalize(E("x^4 + 1"), quartic()) == canonicalize(E("x^3 + x^2 + x"), quartic()));
  const auto c = canonicalize(E("x^4 + 1"), quartic());
  REQUIRE(c.coords.size() == 4);
  CHECK(c.coords == std::vector<BigRational>{0, 1, 1, 1});
  const auto q = make_rational_spec(R("3/2"));
  CHECK(canonicalize(E("x^2"), q).coords == std::vector<BigRational>{R("9/4")});
  const auto z = canonicalize(E("0"), quartic());
  for (const auto& v : z.coords) CHECK(v == 0);
}

TEST_CASE("equality in the monoid") {
  CHECK(equal_in_monoid(E("x^5 + 6x^2"), E("5x^4 + 2x^3 + 4x^2 + 4x + 2"), eisenstein()));
  CHECK(equal_in_monoid(E("x^7 + 1"), E("x^6 + x^5 + x^2 + x"), quartic()));
  CHECK_FALSE(equal_in_monoid(E("x"), E("x^2"), make_rational_spec(R("3/2"))));
  CHECK(equal_in_monoid(E("2x"), E("3"), make_rational_spec(R("3/2"))));
  CHECK_THROWS_AS(E("x - 1"), DomainError);
}

TEST_CASE("enumeration examples") {
  SUBCASE("the Eisenstein quartic element") {
    const auto r = enumerate_factorizations(E("x^5 + 6x^2"), eisenstein());
    CHECK(r.complete);
    CHECK(r.factorizations == facts({"x^5 + 6x^2", "5x^4 + 2x^3 + 4x^2 + 4x + 2", "4x^4 + 8x^3 + 6x + 4"}));
  }
  SUBCASE("3 in N0[3/2]") {
    const auto r = enumerate_factorizations(E("3"), make_rational_spec(R("3/2")));
    CHECK(r.complete);
    CHECK(r.factorizations == facts({"3", "2x"}));
  }
  SUBCASE("an atom factors uniquely") {
    for (const auto& s : {make_rational_spec(R("3/2")), make_root_spec(R("5/2"), 2), make_rational_spec(R("5/3"))}) {
      const auto r = enumerate_factorizations(E("x"), s);
      CHECK(r.complete);
      CHECK(r.factorizations == facts({"x"}));
    }
  }
  SUBCASE("N0[1] is N0") {
    const auto r = enumerate_factorizations(E("3x^2 + 2"), make_rational_spec(R("1")));
    CHECK(r.complete);
    CHECK(r.factorizations == facts({"5"}));
  }
}

TEST_CASE("length set examples") {
  const auto x = length_set(E("x^5 + 6x^2"), eisenstein());
  CHECK(x.complete);
  CHECK(x.lengths == LengthSet::from_values({7, 17, 22}));
  CHECK_FALSE(x.lengths.contains(12));
  CHECK(length_set(E("5"), make_rational_spec(R("5/2"))).lengths == LengthSet::from_values({2, 5}));
  CHECK(length_set(E("x^3"), quartic()).lengths == LengthSet::single(1));
  // brute force over n = sum c_k (5/2)^k
  CHECK(testing::rational_lengths(5, R("5/2"), 3, 10) == std::set<std::uint64_t>{2, 5});
}

TEST_CASE("completeness rules") {
  const auto below = make_rational_spec(R("2/3"));
  CHECK_THROWS_AS(enumerate_factorizations(E("3"), below), UnsupportedError);
  Bounds b;
  b.max_exponent = 5;
  b.cap = 6;
  const auto r = enumerate_factorizations(E("3"), below, b);
  CHECK_FALSE(r.complete);
  CHECK(r.factorizations.size() > 1);

  Bounds small;
  small.node_budget = 200;
  const auto y6 = enumerate_factorizations(E("x^19 + 1"), quartic(), small);
  CHECK(y6.budget_exhausted);
  CHECK_FALSE(y6.complete);

  Bounds low;
  low.max_exponent = 1;
  CHECK_FALSE(enumerate_factorizations(E("x^5 + 6x^2"), eisenstein(), low).complete);

  Bounds two;
  two.max_results = 2;
  const auto t = enumerate_factorizations(E("x^5 + 6x^2"), eisenstein(), two);
  CHECK(t.truncated);
  CHECK(t.factorizations.size() == 2);
  CHECK_FALSE(t.complete);

  // alpha^7 is an element but not an atom
  const auto a7 = length_set(E("x^7"), eisenstein());
  CHECK(a7.complete);
  CHECK_FALSE(a7.lengths.empty());
  CHECK_FALSE(a7.lengths.contains(1));
  CHECK_THROWS_AS(enumerate_factorizations(E("1"), make_rational_spec(R("1/2"))), UnsupportedError);
}

TEST_CASE("membership") {
  const auto s = make_rational_spec(R("3/2"));
  CHECK(membership(canonicalize(E("3"), s), s).member);
  CanonicalValue half{{R("1/2")}};
  const auto m = membership(half, s);
  CHECK_FALSE(m.member);
  CHECK(m.complete);
  CanonicalValue neg{{R("-1")}};
  CHECK_FALSE(membership(neg, s).member);
}

TEST_CASE("property: soundness and length consistency") {
  testing::Gen g(31);
  std::vector<MonoidSpec> specs = {make_rational_spec(R("3/2")), make_rational_spec(R("5/3")), make_root_spec(R("3/2"), 2),
                                   quartic(), eisenstein()};
  for (int t = 0; t < 40; ++t) {
    const auto& s = g.pick(specs);
    const auto x = ElementExpr(g.element(static_cast<unsigned>(g.integer(0, 4)), 4));
    const auto want = canonicalize(x, s);
    const auto r = enumerate_factorizations(x, s);
    CAPTURE(to_string(x.poly()));
    CHECK(r.complete);
    for (const auto& z : r.factorizations) {
      CHECK(canonicalize(z.polynomial(), s) == want);
      CHECK(BigInt(static_cast<unsigned long>(z.length())) == eval_at_one(z.polynomial()));
    }
    CHECK(std::is_sorted(r.factorizations.begin(), r.factorizations.end()));
  }
}

TEST_CASE("property: complete results gain nothing from larger bounds") {
  testing::Gen g(32);
  std::vector<MonoidSpec> specs = {make_rational_spec(R("3/2")), make_rational_spec(R("7/4")), make_root_spec(R("5/2"), 2),
                                   make_algebraic_spec(P("x^2 - x - 1"))};
  for (int t = 0; t < 25; ++t) {
    const auto& s = g.pick(specs);
    const auto x = g.element(static_cast<unsigned>(g.integer(0, 2)), 2);
    const auto r = enumerate_factorizations(ElementExpr(x), s);
    REQUIRE(r.complete);
    const unsigned D = r.bounds_used.max_exponent + 1;
    const auto wider = testing::lattice_oracle(s.min_poly, x, D, coefficient_ceiling(x, s), s.atom_exponents(D));
    CAPTURE(to_string(x));
    CHECK(wider == r.factorizations);
  }
}

TEST_CASE("property: both sides of the minimal pair are found") {
  for (const auto& s : {make_rational_spec(R("3/2")), make_rational_spec(R("5/3")), make_root_spec(R("3/2"), 2), eisenstein(),
                        quartic()}) {
    CAPTURE(describe(s));
    const auto mp = minimal_pair(s);
    CHECK(mp.p != mp.q);
    CHECK(equal_in_monoid(ElementExpr(mp.p), ElementExpr(mp.q), s));
    const auto r = enumerate_factorizations(ElementExpr(mp.p), s);
    const auto has = [&](const IntPolynomial& f) {
      return std::any_of(r.factorizations.begin(), r.factorizations.end(),
                         [&](const Factorization& z) { return z.polynomial() == f; });
    };
    CHECK(has(mp.p));
    CHECK(has(mp.q));
  }
}
