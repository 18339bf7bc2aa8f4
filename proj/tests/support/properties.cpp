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

#include "properties.hpp"

#include <algorithm>
#include <functional>

#include "generators.hpp"
#include "mfactor/invariants.hpp"
#include "oracles.hpp"

namespace mfactor::testing {

namespace {

std::string show(const IntPolynomial& x, const MonoidSpec& s) { return to_string(x) + " in " + describe(s); }

std::vector<MonoidSpec> oracle_specs() {
  std::vector<MonoidSpec> v;
  for (const char* q : {"3/2", "5/2", "5/3", "4/3", "7/3", "2/3", "3/5", "3/4"})
    v.push_back(make_rational_spec(parse_rational(q)));
  v.push_back(make_root_spec(parse_rational("3/2"), 2));
  v.push_back(make_root_spec(parse_rational("5/2"), 2));
  v.push_back(make_root_spec(parse_rational("2/3"), 2));
  v.push_back(make_root_spec(parse_rational("5/3"), 3));
  v.push_back(make_algebraic_spec(parse_int_polynomial("x^2 - x - 1")));
  v.push_back(make_algebraic_spec(parse_int_polynomial("x^4 - x^3 - x^2 - x + 1")));
  v.push_back(make_algebraic_spec(parse_int_polynomial("x^4 - 6x^3 + 4x^2 - 2x - 2")));
  v.push_back(make_algebraic_spec(parse_int_polynomial("3x^2 - 2")));
  return v;
}

}  // namespace

PropertyReport metric_axioms(std::size_t max_triples, std::uint64_t seed) {
  PropertyReport r{"distance is a metric on Z(x)"};
  Gen g(seed);
  const std::vector<std::pair<MonoidSpec, const char*>> cases = {
      {make_rational_spec(parse_rational("3/2")), "9x"},
      {make_rational_spec(parse_rational("3/2")), "27"},
      {make_rational_spec(parse_rational("5/2")), "25x"},
      {make_algebraic_spec(parse_int_polynomial("x^4 - x^3 - x^2 - x + 1")), "x^10 + 1"},
      {make_algebraic_spec(parse_int_polynomial("x^4 - 6x^3 + 4x^2 - 2x - 2")), "x^5 + 6x^2"},
      {make_root_spec(parse_rational("3/2"), 2), "9x^2 + 3x"},
  };
  for (const auto& [spec, text] : cases) {
    const auto z = enumerate_factorizations(ElementExpr::parse(text), spec).factorizations;
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < z.size(); ++j) {
        ++r.cases;
        const auto d = distance(z[i], z[j]);
        if (d != distance(z[j], z[i])) r.fail(std::string("symmetry in Z(") + text + ")");
        if ((d == 0) != (i == j)) r.fail(std::string("identity of indiscernibles in Z(") + text + ")");
        if (d != naive_distance(z[i], z[j])) r.fail(std::string("distance formula in Z(") + text + ")");
      }
    if (z.empty()) continue;
    const auto n = static_cast<std::int64_t>(z.size()) - 1;
    for (std::size_t t = 0; t < max_triples; ++t) {
      const auto& a = z[g.integer(0, n)];
      const auto& b = z[g.integer(0, n)];
      const auto& c = z[g.integer(0, n)];
      ++r.cases;
      if (distance(a, c) > distance(a, b) + distance(b, c))
        r.fail(std::string("triangle inequality in Z(") + text + "): " + a.to_string() + ", " + b.to_string() + ", " +
               c.to_string());
    }
  }
  return r;
}

PropertyReport gcd_laws(std::size_t trials, std::uint64_t seed) {
  PropertyReport r{"fact_gcd laws"};
  Gen g(seed + 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = g.factorization(static_cast<unsigned>(g.integer(0, 6)), 5);
    const auto b = g.factorization(static_cast<unsigned>(g.integer(0, 6)), 5);
    const auto c = g.factorization(static_cast<unsigned>(g.integer(0, 6)), 5);
    ++r.cases;
    const auto ab = fact_gcd(a, b);
    if (ab != fact_gcd(b, a)) r.fail("commutativity: " + a.to_string() + ", " + b.to_string());
    if (fact_gcd(ab, c) != fact_gcd(a, fact_gcd(b, c))) r.fail("associativity");
    if (fact_gcd(a, a) != a) r.fail("idempotence: " + a.to_string());
    for (unsigned k = 0; k < 8; ++k)
      if (ab.count(k) > a.count(k) || ab.count(k) > b.count(k)) r.fail("gcd exceeds an argument at " + std::to_string(k));
    std::uint64_t shared = 0;
    for (unsigned k = 0; k < 8; ++k) shared += std::min(a.count(k), b.count(k));
    if (ab.length() != shared) r.fail("gcd length");
  }
  return r;
}

PropertyReport dfs_vs_oracle(std::size_t instances, std::uint64_t seed) {
  PropertyReport r{"search engine equals the lattice oracle"};
  Gen g(seed + 2);
  const auto specs = oracle_specs();
  for (std::size_t t = 0; t < instances; ++t) {
    const auto& spec = g.pick(specs);
    const auto x = g.element(static_cast<unsigned>(g.integer(0, 3)), 3);
    const unsigned D = static_cast<unsigned>(std::max(0, x.degree()) + g.integer(0, spec.rank == 1 ? 2 : 1));
    const auto cap = static_cast<std::uint64_t>(g.integer(2, spec.rank == 1 ? 6 : 4));
    ++r.cases;
    Bounds b;
    b.max_exponent = D;
    b.cap = cap;
    const auto got = enumerate_factorizations(ElementExpr(x), spec, b);
    const auto want = lattice_oracle(spec.min_poly, x, D, cap, spec.atom_exponents(D));
    if (got.factorizations != want) {
      r.fail(show(x, spec) + " D=" + std::to_string(D) + " cap=" + std::to_string(cap) + ": got " +
             std::to_string(got.factorizations.size()) + ", oracle " + std::to_string(want.size()));
      continue;
    }
    const auto ls = length_set(ElementExpr(x), spec, b).lengths.values();
    const auto ol = oracle_lengths(want);
    if (std::vector<std::uint64_t>(ol.begin(), ol.end()) != ls) r.fail("lengths of " + show(x, spec));
    if (spec.rank == 1) {
      const auto rl = rational_lengths(eval_rational(x, spec.q), spec.q, D, cap);
      if (rl != ol) r.fail("rational recursion disagrees on " + show(x, spec));
    }
  }
  return r;
}

PropertyReport mst_vs_threshold(std::size_t instances, std::uint64_t seed) {
  PropertyReport r{"catenary by MST equals threshold connectivity"};
  Gen g(seed + 3);
  std::vector<MonoidSpec> specs;
  for (const char* q : {"3/2", "5/2", "5/3", "4/3", "7/4"}) specs.push_back(make_rational_spec(parse_rational(q)));
  specs.push_back(make_root_spec(parse_rational("3/2"), 2));
  specs.push_back(make_algebraic_spec(parse_int_polynomial("x^4 - x^3 - x^2 - x + 1")));
  specs.push_back(make_algebraic_spec(parse_int_polynomial("2x^2 - 3")));
  std::size_t attempts = 0;
  while (r.cases < instances && attempts < 20 * instances) {
    ++attempts;
    const auto& spec = g.pick(specs);
    const auto x = ElementExpr(g.element(static_cast<unsigned>(g.integer(0, 4)), 5));
    const auto z = enumerate_factorizations(x, spec);
    if (!z.complete || z.factorizations.size() < 2 || z.factorizations.size() > 300) continue;
    ++r.cases;
    const auto c = catenary_element(x, spec);
    const auto want = threshold_catenary(z.factorizations);
    if (c.value != want)
      r.fail(show(x.poly(), spec) + ": MST " + std::to_string(c.value) + ", threshold " + std::to_string(want));
    const auto comps = betti_components(z.factorizations);
    if (comps.size() != naive_betti_components(z.factorizations)) r.fail("Betti components of " + show(x.poly(), spec));
  }
  return r;
}

PropertyReport min_length_bound() {
  PropertyReport r{"lengths >= min(n, d) when |Z(x)| >= 2"};
  for (const char* q : {"3/2", "5/2", "5/3", "4/3", "7/3", "7/2"}) {
    const auto spec = make_rational_spec(parse_rational(q));
    const auto bound = std::min(numer(spec.q), denom(spec.q)).get_ui();
    for (const auto& e : scan_elements(spec, 3, 4)) {
      Bounds two;
      two.max_results = 2;
      if (enumerate_factorizations(e.value, spec, two).factorizations.size() < 2) continue;
      ++r.cases;
      const auto L = length_set(e.value, spec);
      if (!L.complete || L.lengths.min() < bound)
        r.fail(to_string(e.expr.poly()) + " in " + describe(spec) + ": L = " + L.lengths.to_string());
    }
  }
  return r;
}

}  // namespace mfactor::testing
