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
#include "mfactor/realroot.hpp"

using namespace mfactor;

namespace {

IntPolynomial P(const char* s) { return parse_int_polynomial(s); }
BigRational R(const char* s) { return parse_rational(s); }

int sign_of(const BigRational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

TEST_CASE("isolating sqrt 2") {
  const auto roots = isolate_positive_roots(P("x^2 - 2"));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].lo() >= 1);
  CHECK(roots[0].hi() <= 2);
  const auto fine = roots[0].refined_to(R("1/1000000"));
  CHECK(fine.lo() < R("1414214/1000000"));
  CHECK(fine.hi() > R("1414213/1000000"));
}

TEST_CASE("two positive roots of x^4 - x^3 - x^2 - x + 1") {
  const auto roots = isolate_positive_roots(P("x^4 - x^3 - x^2 - x + 1"));
  REQUIRE(roots.size() == 2);
  const auto b = roots[0].refined_to(R("1/100000"));
  const auto a = roots[1].refined_to(R("1/100000"));
  CHECK(b.lo() > R("580/1000"));
  CHECK(b.hi() < R("582/1000"));
  CHECK(a.lo() > R("1721/1000"));
  CHECK(a.hi() < R("1723/1000"));
  CHECK(roots[0].root_index() == 0);
  CHECK(roots[1].root_index() == 1);
}

TEST_CASE("the Eisenstein quartic has one positive root in (5, 6)") {
  const auto m = P("x^4 - 6x^3 + 4x^2 - 2x - 2");
  CHECK(evaluate(m, BigRational(5)) == -37);
  CHECK(evaluate(m, BigRational(6)) == 130);
  const auto roots = isolate_positive_roots(m);
  REQUIRE(roots.size() == 1);
  const auto a = roots[0].refined_to(R("1/100"));
  CHECK(a.lo() >= 5);
  CHECK(a.hi() <= 6);
}

TEST_CASE("non-square-free input is rejected") {
  CHECK_THROWS_AS(isolate_positive_roots(P("x^3 - 4x^2 + 4x")), DomainError);
}

TEST_CASE("sign at a root") {
  const auto s2 = isolate_positive_roots(P("x^2 - 2"))[0];
  CHECK(sign_at_root(P("x^2 - 2"), s2) == 0);
  CHECK(sign_at_root(P("x - 1"), s2) == 1);
  CHECK(sign_at_root(P("x^3 - 5"), s2) == -1);
  CHECK(sign_at_root(P("2x^2 - 4"), s2) == 0);
  CHECK(sign_at_root(P("x^4 - 4"), s2) == 0);
  CHECK(sign_at_root(P("-x^3 + 3"), s2) == 1);
}

TEST_CASE("floor_log") {
  const auto s2 = isolate_positive_roots(P("x^2 - 2"))[0];
  CHECK(floor_log(parse_polynomial("2"), s2) == 2);
  CHECK(floor_log(parse_polynomial("1"), s2) == 0);
  CHECK(floor_log(parse_polynomial("x"), s2) == 1);
  const auto q = AlgebraicNumber::rational(R("3/2"));
  CHECK(floor_log(parse_polynomial("5"), q) == 3);
  CHECK(floor_log(parse_polynomial("27/8"), q) == 3);
  CHECK(floor_log(parse_polynomial("81/16"), q) == 4);
  CHECK(floor_log(parse_polynomial("81/16 - 1/1000000"), q) == 3);
}

TEST_CASE("property: refinement is nested and keeps the sign change") {
  for (const char* s : {"x^2 - 2", "x^4 - x^3 - x^2 - x + 1", "x^4 - 6x^3 + 4x^2 - 2x - 2", "3x^2 - 2", "x^3 - 3x + 1"}) {
    const auto m = P(s);
    for (auto a : isolate_positive_roots(m)) {
      CAPTURE(s);
      CHECK(a.lo() > 0);
      for (int i = 0; i < 20; ++i) {
        const auto b = a.refined();
        CHECK(b.lo() >= a.lo());
        CHECK(b.hi() <= a.hi());
        CHECK(b.hi() - b.lo() < a.hi() - a.lo());
        CHECK(b.root_index() == a.root_index());
        CHECK(sign_of(evaluate(m, b.lo())) * sign_of(evaluate(m, b.hi())) < 0);
        a = b;
      }
    }
  }
}

TEST_CASE("property: sign at root is multiplicative") {
  testing::Gen g(21);
  std::vector<AlgebraicNumber> alphas;
  for (const char* s : {"x^2 - 2", "x^4 - x^3 - x^2 - x + 1", "x^4 - 6x^3 + 4x^2 - 2x - 2", "2x^2 - 3"})
    for (const auto& a : isolate_positive_roots(P(s))) alphas.push_back(a);
  for (int t = 0; t < 200; ++t) {
    const auto& a = g.pick(alphas);
    const auto f = g.int_poly(static_cast<int>(g.integer(0, 5)), -6, 6);
    const auto h = g.int_poly(static_cast<int>(g.integer(0, 5)), -6, 6);
    CHECK(sign_at_root(f * h, a) == sign_at_root(f, a) * sign_at_root(h, a));
  }
}

TEST_CASE("property: rational roots agree with exact evaluation") {
  testing::Gen g(22);
  for (int t = 0; t < 200; ++t) {
    const auto q = make_rational(BigInt(static_cast<long>(g.integer(1, 12))), BigInt(static_cast<long>(g.integer(1, 12))));
    const auto a = AlgebraicNumber::rational(q);
    const auto f = g.int_poly(static_cast<int>(g.integer(0, 5)), -8, 8);
    CHECK(sign_at_root(f, a) == sign_of(evaluate(f, q)));
  }
}
