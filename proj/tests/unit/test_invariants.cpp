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

#include "mfactor/invariants.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace mfactor;

namespace {

IntPolynomial P(const char* s) { return parse_int_polynomial(s); }
BigRational R(const char* s) { return parse_rational(s); }
ElementExpr E(const char* s) { return ElementExpr::parse(s); }
Factorization F(std::vector<std::pair<unsigned, std::uint64_t>> p) { return Factorization::from_pairs(p); }

std::vector<std::uint64_t> rel(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

void require(const testing::PropertyReport& r) {
  INFO(r.name);
  for (const auto& f : r.failures) INFO(f);
  CHECK(r.cases > 0);
  CHECK(r.failed == 0);
  for (const auto& f : r.failures) MESSAGE(f);
}

}  // namespace

TEST_CASE("gcd and distance") {
  CHECK(fact_gcd(F({{0, 2}, {2, 1}}), F({{0, 1}, {1, 3}})) == F({{0, 1}}));
  const auto z = F({{0, 2}, {3, 1}});
  CHECK(fact_gcd(z, z) == z);
  CHECK(fact_gcd(F({{0, 3}}), F({{1, 2}})).empty());
  CHECK(distance(F({{0, 3}}), F({{1, 2}})) == 3);
  CHECK(distance(z, z) == 0);
  // both factor 9/2 in N0[3/2]
  CHECK(distance(F({{0, 3}, {1, 1}}), F({{1, 3}})) == 3);
}

TEST_CASE("catenary of single elements") {
  const auto q = make_rational_spec(R("3/2"));
  const auto c3 = catenary_element(E("3"), q);
  CHECK(c3.complete);
  CHECK(c3.value == 3);
  CHECK(catenary_element(E("x"), q).value == 0);
  const auto c92 = catenary_element(E("3x"), q);
  CHECK(c92.factorizations == 3);
  CHECK(c92.value == 3);
  // brute force on Z(9/2) = {3x, 2x^2, x + 3}
  CHECK(testing::threshold_catenary({F({{1, 3}}), F({{2, 2}}), F({{0, 3}, {1, 1}})}) == 3);
  CHECK(catenary_of({}) == 0);
}

TEST_CASE("Betti graphs") {
  const auto q = make_rational_spec(R("3/2"));
  const auto b3 = betti_graph(E("3"), q);
  CHECK(b3.is_betti);
  REQUIRE(b3.components.size() == 2);
  CHECK(b3.complete);

  const auto b92 = betti_graph(E("3x"), q);
  CHECK(b92.is_betti);
  REQUIRE(b92.components.size() == 2);
  // 2x^2 is the isolated vertex
  bool isolated = false;
  for (const auto& c : b92.components)
    if (c.size() == 1 && c[0] == F({{2, 2}})) isolated = true;
  CHECK(isolated);

  CHECK_FALSE(betti_graph(E("x"), q).is_betti);
  CHECK(betti_graph(E("5"), make_rational_spec(R("5/2"))).is_betti);
  CHECK_FALSE(betti_graph(E("4"), q).is_betti);
}

TEST_CASE("AP and AAP analysis") {
  const auto ap = ap_aap_analyze(LengthSet::from_values({2, 5}), 3, 0);
  CHECK(ap.is_ap);
  CHECK(ap.difference == 3u);
  const auto nap = ap_aap_infer(LengthSet::from_values({7, 17, 22}), 8);
  CHECK_FALSE(nap.is_ap);

  // S must lie in c + dZ, so 5 rules out d = 2
  CHECK_FALSE(aap_decompose({0, 2, 4, 5}, 2, 1));
  const auto a = aap_decompose({0, 4, 6, 8, 12}, 2, 4);
  REQUIRE(a);
  CHECK(a->c == 4);
  CHECK(rel(a->s_star) == std::vector<std::uint64_t>{0, 2, 4});
  CHECK(a->s_prime == std::vector<std::int64_t>{-4});
  CHECK(a->s_double == std::vector<std::int64_t>{8});
  CHECK_FALSE(aap_decompose({0, 4, 6, 8, 12}, 2, 3));

  const auto one = ap_aap_analyze(LengthSet::single(4), 1, 0);
  CHECK(one.is_ap);
  CHECK_FALSE(one.difference);
  REQUIRE(one.aap);
  CHECK(one.aap->s_star == std::vector<std::int64_t>{0});
}

TEST_CASE("furcus witnesses") {
  const auto q = make_rational_spec(R("3/2"));
  const auto w0 = furcus_witness(q, 0);
  REQUIRE(w0.found);
  CHECK(w0.lengths.min() == 1);
  for (std::uint64_t k : {2u, 3u, 4u}) {
    CAPTURE(k);
    const auto w = furcus_witness(q, k);
    REQUIRE(w.found);
    CHECK(w.lengths.min() > k);
    // independent: every factorization from the rational recursion is longer than k
    const auto value = canonicalize(*w.expr, q).coords[0];
    const auto lens = testing::rational_lengths(value, q.q, default_max_exponent(w.element, q), floor(value).get_ui() + 1);
    REQUIRE_FALSE(lens.empty());
    CHECK(*lens.begin() > k);
    // smallest natural with that property, scanned directly
    std::uint64_t first = 0;
    for (std::uint64_t n = 1; n <= 50 && first == 0; ++n) {
      const auto L = testing::rational_lengths(BigRational(static_cast<unsigned long>(n)), q.q, 12, n);
      if (*L.begin() > k) first = n;
    }
    CHECK(canonicalize(*w.expr, q).coords[0] == BigRational(static_cast<unsigned long>(first)));
  }
}

TEST_CASE("scan elements are distinct and increasing") {
  const auto q = make_rational_spec(R("3/2"));
  const auto v = scan_elements(q, 2, 2);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1].value.coords[0] < v[i].value.coords[0]);
  // 26 nonzero expressions, 2x = 3 and 2x^2 = 3x collide with earlier ones
  std::set<BigRational> distinct;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        if (a + b + c > 0) distinct.insert(BigRational(a) + BigRational(b) * R("3/2") + BigRational(c) * R("9/4"));
  CHECK(v.size() == distinct.size());
}

TEST_CASE("monoid scans") {
  const auto q = make_rational_spec(R("3/2"));
  ScanOptions o;
  o.max_exponent = 3;
  o.max_coefficient = 3;
  const auto c = catenary_monoid_scan(q, o);
  CHECK(c.complete);
  CHECK(c.observed_sup == 3);
  CHECK(c.formula == 3u);
  CHECK(c.formula_holds);

  const auto b = betti_scan(q, o);
  CHECK(b.complete);
  CHECK(b.has_formula);
  CHECK(b.formula_matches);
  REQUIRE_FALSE(b.betti.empty());
  CHECK(b.betti[0].value.coords[0] == 3);
  // the atom graph agrees with full Betti graphs on every scanned element
  std::size_t found = 0;
  for (const auto& e : scan_elements(q, 3, 3)) {
    const auto z = enumerate_factorizations(e.value, q);
    const bool full = testing::naive_betti_components(z.factorizations) >= 2;
    if (full) ++found;
  }
  CHECK(found == b.betti.size());

  const auto fam = betti_family(q, 3);
  REQUIRE(fam.size() == 4);
  CHECK(fam[0].coords[0] == 3);
  CHECK(fam[1].coords[0] == R("9/2"));
  CHECK(fam[2].coords[0] == R("27/4"));
  CHECK(fam[3].coords[0] == R("81/8"));
}

TEST_CASE("scans are deterministic across worker counts") {
  const auto q = make_rational_spec(R("5/3"));
  ScanOptions one;
  one.max_exponent = 3;
  one.max_coefficient = 4;
  one.workers = 1;
  ScanOptions four = one;
  four.workers = 4;
  const auto a = catenary_monoid_scan(q, one);
  const auto b = catenary_monoid_scan(q, four);
  CHECK(a.histogram == b.histogram);
  CHECK(a.observed_sup == b.observed_sup);
  CHECK(a.argmax->value == b.argmax->value);
  const auto x = betti_scan(q, one);
  const auto y = betti_scan(q, four);
  REQUIRE(x.betti.size() == y.betti.size());
  for (std::size_t i = 0; i < x.betti.size(); ++i) CHECK(x.betti[i].value == y.betti[i].value);
}

TEST_CASE("non-UFM fixtures reach catenary at least 3") {
  // a complete scan with catenary <= 2 would force a UFM
  for (const auto& s : {make_rational_spec(R("3/2")), make_rational_spec(R("4/3")), make_root_spec(R("3/2"), 2),
                        make_algebraic_spec(P("2x^2 - 3"))}) {
    CAPTURE(describe(s));
    REQUIRE(s.classification.ufm.value == false);
    ScanOptions o;
    o.max_exponent = 3;
    o.max_coefficient = 3;
    const auto c = catenary_monoid_scan(s, o);
    CHECK(c.observed_sup >= 3);
  }
  ScanOptions o;
  o.max_exponent = 3;
  o.max_coefficient = 3;
  CHECK(catenary_monoid_scan(make_rational_spec(R("2")), o).observed_sup == 0);
  // alpha^2 = alpha + 1 makes N0[alpha] free on {1, alpha}
  CHECK(catenary_monoid_scan(make_algebraic_spec(P("x^2 - x - 1")), o).observed_sup == 0);
}

TEST_CASE("property suites") {
  require(testing::metric_axioms());
  require(testing::gcd_laws());
  require(testing::dfs_vs_oracle());
  require(testing::mst_vs_threshold());
  require(testing::min_length_bound());
}
