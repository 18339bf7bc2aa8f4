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

#include "mfactor/reproduce.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

namespace mfactor {

namespace {

using report::Json;

struct Ctx {
  CaseResult& r;
  unsigned workers;
  void check(bool ok, const std::string& what) { r.checks.push_back({what, ok}); }
};

std::string join(const std::vector<unsigned>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

IntPolynomial mono(unsigned k, long c = 1) { return IntPolynomial::monomial(BigInt(c), k); }

// -- cases

void non_ap_lengths(Ctx& c) {
  const auto spec = make_algebraic_spec(parse_int_polynomial("X^4 - 6X^3 + 4X^2 - 2X - 2"));
  c.r.data["spec"] = report::to_json(spec);
  const auto atoms = atoms_up_to(spec, 7);
  std::vector<unsigned> found;
  bool definitive = true;
  for (const auto& a : atoms) {
    if (a.is_atom) found.push_back(a.exponent);
    definitive = definitive && a.definitive;
  }
  c.check(found == std::vector<unsigned>{0, 1, 2, 3, 4, 5} && definitive,
          "atoms up to 7 are exactly {0..5}: got " + join(found));
  const auto x = ElementExpr::parse("X^5 + 6X^2");
  const auto L = length_set(x, spec);
  c.r.data["lengths"] = report::to_json(L);
  c.check(L.complete, "length set complete");
  c.check(L.lengths.contains(7) && L.lengths.contains(17) && L.lengths.contains(22),
          "7, 17, 22 in L(x) = " + L.lengths.to_string());
  c.check(!L.lengths.contains(12), "12 not in L(x)");
  const auto rep = ap_aap_infer(L.lengths, 0);
  c.check(!rep.is_ap, "L(x) is not an arithmetic progression");
}

void roots_example(Ctx& c) {
  const auto m = parse_int_polynomial("X^4 - X^3 - X^2 - X + 1");
  const auto roots = isolate_positive_roots(m);
  c.check(roots.size() == 2, "two positive roots, got " + std::to_string(roots.size()));
  if (roots.size() != 2) return;
  const BigRational eps(1, 2000);
  auto near = [&](const AlgebraicNumber& a, const BigRational& v) {
    // a in (v - eps, v + eps), decided by signs of m at the ends
    const auto r = a.refined_to(eps);
    return r.lo() > v - eps && r.hi() < v + eps;
  };
  c.check(near(roots[0], BigRational(581, 1000)), "beta ~ 0.581: " + roots[0].decimal(6));
  c.check(near(roots[1], BigRational(1722, 1000)), "alpha ~ 1.722: " + roots[1].decimal(6));
  c.r.data["roots"] = Json::array({roots[0].decimal(8), roots[1].decimal(8)});
}

void betti_rational(Ctx& c, const BigRational& q) {
  const auto spec = make_rational_spec(q);
  ScanOptions o;
  o.max_exponent = 6;
  o.max_coefficient = 8;
  o.workers = c.workers;
  const auto r = betti_scan(spec, o);
  c.r.data["scan"] = report::to_json(r);
  c.check(r.complete, "scan complete over " + std::to_string(r.elements) + " elements");
  c.check(r.formula_matches, "Betti elements equal n^(m+1)/d^m inside the scan (" + std::to_string(r.betti.size()) +
                                 " found, " + std::to_string(r.formula.size()) + " predicted)");
  const auto n = numer(q).get_ui(), d = denom(q).get_ui();
  bool isolated = true;
  for (std::size_t m = 0; m < r.betti.size(); ++m) {
    const auto g = betti_graph(r.betti[m].value, spec);
    // d q^(m+1) when d < n, n q^m when n < d
    const Factorization expect =
        d < n ? Factorization::from_pairs({{static_cast<unsigned>(m + 1), d}})
              : Factorization::from_pairs({{static_cast<unsigned>(m), n}});
    bool has = false;
    for (const auto& comp : g.components) has = has || (comp.size() == 1 && comp[0] == expect);
    isolated = isolated && has && g.complete;
  }
  c.check(isolated, "each Betti element has the predicted isolated vertex");
}

void lifted_betti_case(Ctx& c) {
  const auto spec = make_root_spec(BigRational(3, 2), 2);
  c.r.data["spec"] = report::to_json(spec);
  const auto fam = lifted_betti(spec, 2);
  std::vector<std::vector<BigRational>> expected = {
      {3, 0}, {0, 3}, {BigRational(9, 2), 0}, {0, BigRational(9, 2)}, {BigRational(27, 4), 0}, {0, BigRational(27, 4)}};
  bool same = fam.size() == expected.size();
  bool all_betti = true;
  Json list = Json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (same) same = fam[i].value.coords == expected[i];
    all_betti = all_betti && fam[i].direct.is_betti && fam[i].direct.complete;
    list.push_back(report::to_json(fam[i].direct));
  }
  c.r.data["family"] = list;
  c.check(same, "family {3, 3a, 9/2, (9/2)a, 27/4, (27/4)a}");
  c.check(all_betti, "each confirmed Betti by a direct Betti graph");
  // elements with both coordinates nonzero
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<int> coef(0, 3);
  int sampled = 0;
  bool none_betti = true;
  while (sampled < 10) {
    std::vector<BigInt> cs(6);
    for (auto& x : cs) x = coef(rng);
    const ElementExpr e{IntPolynomial(cs)};
    const auto v = canonicalize(e, spec);
    if (v.coords[0] == 0 || v.coords[1] == 0) continue;
    ++sampled;
    const auto g = betti_graph(e, spec);
    none_betti = none_betti && !g.is_betti && g.complete;
  }
  c.check(none_betti, "10 sampled two-coordinate elements are not Betti");
}

void catenary_rational(Ctx& c, const BigRational& q) {
  const auto spec = make_rational_spec(q);
  ScanOptions o;
  o.workers = c.workers;
  const auto r = catenary_monoid_scan(spec, o);
  c.r.data["scan"] = report::to_json(r);
  c.check(r.complete, "scan complete over " + std::to_string(r.elements) + " elements");
  c.check(r.formula && r.observed_sup == *r.formula,
          "observed sup " + std::to_string(r.observed_sup) + " = max(n, d) = " +
              (r.formula ? std::to_string(*r.formula) : "?"));
  c.check(r.formula_holds, "no element exceeds max(n, d)");
}

void catenary_realization(Ctx& c) {
  const auto acc = make_algebraic_spec(parse_int_polynomial("2X^2 - 3"));
  c.r.data["accp_spec"] = report::to_json(acc);
  c.check(acc.classification.accp.value == true && acc.rank == 2, "2X^2 - 3: ACCP, rank 2");
  ScanOptions o;
  o.workers = c.workers;
  const auto r = catenary_monoid_scan(acc, o);
  c.r.data["accp_scan"] = report::to_json(r);
  c.check(r.complete && r.observed_sup == 3, "2X^2 - 3: scanned sup c(x) = " + std::to_string(r.observed_sup));

  const auto non = make_algebraic_spec(parse_int_polynomial("3X^2 - 2"));
  c.r.data["non_accp_spec"] = report::to_json(non);
  c.check(non.classification.atomic.value == true && non.classification.accp.value == false,
          "3X^2 - 2: atomic, not ACCP");
  ScanOptions b = o;
  b.bounds.max_exponent = o.max_exponent + 4;
  b.bounds.cap = 12;
  const auto r2 = catenary_monoid_scan(non, b);
  c.r.data["non_accp_scan"] = report::to_json(r2);
  c.check(r2.observed_sup == 3, "3X^2 - 2: bounded scan reaches 3 and never exceeds it (sup " +
                                     std::to_string(r2.observed_sup) + ")");
}

ElementExpr y_k(unsigned k) { return ElementExpr(mono(3 * k + 1) + mono(0)); }

ElementExpr y_k_other(unsigned k) {
  IntPolynomial p = mono(3 * k) + mono(1);
  for (unsigned i = 1; i <= k; ++i) p = p + mono(3 * i - 1);
  return ElementExpr(p);
}

void y_k_case(Ctx& c) {
  const auto spec = make_algebraic_spec(parse_int_polynomial("X^4 - X^3 - X^2 - X + 1"));
  c.r.data["spec"] = report::to_json(spec);
  bool ids = true;
  for (unsigned k = 1; k <= 6; ++k) ids = ids && equal_in_monoid(y_k(k), y_k_other(k), spec);
  c.check(ids, "y_k identity holds for k = 1..6");
  Json ls = Json::array();
  bool lens = true;
  for (unsigned k = 1; k <= 6; ++k) {
    const auto L = length_set(y_k(k), spec);
    ls.push_back(report::to_json(L));
    lens = lens && L.complete && L.lengths.contains(2) && L.lengths.contains(k + 2) && !L.lengths.contains(1);
  }
  c.r.data["lengths"] = ls;
  c.check(lens, "complete L(y_k) contains 2 and k + 2 and not 1, k = 1..6");
  std::uint64_t prev = 0;
  bool grows = true;
  Json cs = Json::array();
  for (unsigned k = 1; k <= 3; ++k) {
    const auto ce = catenary_element(y_k(k), spec);
    cs.push_back(report::to_json(ce));
    // a chain out of the length-2 factorization jumps to length >= k + 2
    grows = grows && ce.complete && ce.value >= prev && ce.value >= k + 1;
    prev = ce.value;
  }
  c.r.data["catenary"] = cs;
  c.check(grows, "c(y_k) nondecreasing with c(y_k) >= k + 1, k = 1..3");
}

void ap_roots(Ctx& c) {
  const auto spec = make_root_spec(BigRational(5, 2), 2);
  c.r.data["spec"] = report::to_json(spec);
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<int> coef(0, 3);
  bool ap = true, lifted = true;
  Json items = Json::array();
  for (int i = 0; i < 20; ++i) {
    std::vector<BigInt> cs(6);
    for (auto& x : cs) x = coef(rng);
    if (IntPolynomial(cs).is_zero()) cs[0] = 1;
    const ElementExpr e{IntPolynomial(cs)};
    const auto L = length_set(e, spec);
    const auto rep = ap_aap_infer(L.lengths, 0);
    ap = ap && L.complete && rep.is_ap && (!rep.difference || *rep.difference == 3);
    const auto lift = lifted_length_set(e, spec);
    lifted = lifted && lift.complete && lift.lengths == L.lengths;
    items.push_back({{"expr", to_string(e.poly())}, {"lengths", report::to_json(L.lengths)}});
  }
  c.r.data["elements"] = items;
  c.check(ap, "20 sampled length sets are APs with difference 3");
  c.check(lifted, "lifted length sets equal direct ones");
}

void furcus_case(Ctx& c) {
  const auto spec = make_rational_spec(BigRational(3, 2));
  Json ws = Json::array();
  for (std::uint64_t k : {2, 3, 4}) {
    const auto w = furcus_witness(spec, k);
    ws.push_back(report::to_json(w));
    bool ok = w.found;
    if (ok) {
      const auto z = enumerate_factorizations(w.element, spec);
      std::vector<std::uint64_t> lens;
      for (const auto& f : z.factorizations) lens.push_back(f.length());
      const auto L = LengthSet::from_values(lens);
      ok = z.complete && L == w.lengths && L.min() > k;
    }
    c.check(ok, "k = " + std::to_string(k) + ": witness " + (w.expr ? to_string(w.expr->poly()) : "none") +
                    " with L = " + w.lengths.to_string());
  }
  c.r.data["witnesses"] = ws;
}

struct Entry {
  CaseInfo info;
  std::function<void(Ctx&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> cases = {
      {{"nonAP-lengths", "atoms {0..5}; 7, 17, 22 in L(a^5 + 6a^2), 12 not; not an AP"}, non_ap_lengths},
      {{"roots-1722", "X^4 - X^3 - X^2 - X + 1 has positive roots ~0.581 and ~1.722"}, roots_example},
      {{"betti-3-2", "Betti elements of N0[3/2] are 3^(m+1)/2^m"}, [](Ctx& c) { betti_rational(c, {3, 2}); }},
      {{"betti-5-2", "Betti elements of N0[5/2] are 5^(m+1)/2^m"}, [](Ctx& c) { betti_rational(c, {5, 2}); }},
      {{"betti-5-3", "Betti elements of N0[5/3] are 5^(m+1)/3^m"}, [](Ctx& c) { betti_rational(c, {5, 3}); }},
      {{"lifted-betti-3-2", "Betti elements of N0[sqrt(3/2)] from the root lift"}, lifted_betti_case},
      {{"catenary-3-2", "c(N0[3/2]) = 3"}, [](Ctx& c) { catenary_rational(c, {3, 2}); }},
      {{"catenary-5-2", "c(N0[5/2]) = 5"}, [](Ctx& c) { catenary_rational(c, {5, 2}); }},
      {{"catenary-4-3", "c(N0[4/3]) = 4"}, [](Ctx& c) { catenary_rational(c, {4, 3}); }},
      {{"catenary-2x2-3", "2X^2 - 3 and 3X^2 - 2 realize catenary degree 3"}, catenary_realization},
      {{"yk-catenary", "y_k identities, L(y_k) and growing c(y_k)"}, y_k_case},
      {{"ap-roots-5-2", "length sets of N0[sqrt(5/2)] are APs with difference 3"}, ap_roots},
      {{"furcus-3-2", "N0[3/2] has elements with min length > k for k = 2, 3, 4"}, furcus_case},
  };
  return cases;
}

}  // namespace

std::vector<CaseInfo> reproduce_cases() {
  std::vector<CaseInfo> out;
  for (const auto& e : registry()) out.push_back(e.info);
  return out;
}

CaseResult run_case(const std::string& id, unsigned workers) {
  for (const auto& e : registry()) {
    if (e.info.id != id) continue;
    CaseResult r;
    r.id = e.info.id;
    r.title = e.info.title;
    r.data = Json::object();
    Ctx ctx{r, workers};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(ctx);
    } catch (const Error& err) {
      ctx.check(false, std::string("error: ") + err.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = !r.checks.empty();
    for (const auto& c : r.checks) r.passed = r.passed && c.passed;
    return r;
  }
  throw DomainError("unknown case \"" + id + "\"");
}

report::Json to_json(const CaseResult& r) {
  report::Json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["passed"] = r.passed;
  report::Json checks = report::Json::array();
  for (const auto& c : r.checks) checks.push_back({{"check", c.what}, {"passed", c.passed}});
  j["checks"] = checks;
  j["seconds"] = r.seconds;
  j["data"] = r.data;
  return j;
}

}  // namespace mfactor
