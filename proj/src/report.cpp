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

#include "mfactor/report.hpp"

namespace mfactor::report {

Json big(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

BigInt big_from(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer in JSON, got " + j.dump());
}

Json poly(const IntPolynomial& f) {
  Json a = Json::array();
  for (const auto& c : f.coefficients()) a.push_back(big(c));
  return a;
}

IntPolynomial poly_from(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(big_from(x));
  return IntPolynomial(std::move(c));
}

Json to_json(const Flag& f) {
  Json j;
  j["value"] = f.value ? Json(*f.value) : Json(nullptr);
  j["provenance"] = to_string(f.provenance);
  j["rule"] = f.rule;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["atomic"] = to_json(c.atomic);
  j["bfm"] = to_json(c.bfm);
  j["accp"] = to_json(c.accp);
  j["ufm"] = to_json(c.ufm);
  return j;
}

Json to_json(const MonoidSpec& s) {
  Json j;
  j["route"] = to_string(s.route);
  if (s.route != Route::AlgebraicEval) j["q"] = to_string(s.q);
  if (s.route == Route::IrreducibleRoot) j["n"] = s.n;
  j["min_poly"] = poly(s.min_poly);
  j["min_poly_text"] = to_string(s.min_poly);
  j["alpha"] = {{"lo", to_string(s.alpha.lo())},
                {"hi", to_string(s.alpha.hi())},
                {"root_index", s.alpha.root_index()},
                {"decimal", s.alpha.decimal(10)}};
  j["alpha_gt_one"] = s.alpha_gt_one;
  j["rank"] = s.rank;
  Json atoms;
  atoms["kind"] = to_string(s.atoms.kind);
  if (s.atoms.kind == AtomKind::FiniteList) atoms["exponents"] = s.atoms.exponents;
  if (s.atoms.kind == AtomKind::BoundedUnknown) atoms["verified_through"] = s.atoms.verified_through;
  j["atoms"] = atoms;
  j["classification"] = to_json(s.classification);
  j["irreducibility"] = to_string(s.irreducibility.certificate);
  const auto mp = minimal_pair(s);
  j["minimal_pair"] = {{"p", poly(mp.p)}, {"q", poly(mp.q)}};
  return j;
}

MonoidSpec spec_from_json(const Json& j) {
  const std::string route = j.at("route").get<std::string>();
  if (route == to_string(Route::RationalCyclic)) return make_rational_spec(parse_rational(j.at("q").get<std::string>()));
  if (route == to_string(Route::IrreducibleRoot))
    return make_root_spec(parse_rational(j.at("q").get<std::string>()), j.at("n").get<unsigned>());
  if (route == to_string(Route::AlgebraicEval)) {
    std::optional<int> idx;
    if (j.contains("alpha") && j["alpha"].contains("root_index")) idx = j["alpha"]["root_index"].get<int>();
    return make_algebraic_spec(poly_from(j.at("min_poly")), idx);
  }
  throw ParseError("unknown route \"" + route + "\"");
}

Json to_json(const CanonicalValue& v) {
  Json a = Json::array();
  for (const auto& c : v.coords) a.push_back(to_string(c));
  return a;
}

CanonicalValue value_from_json(const Json& j) {
  CanonicalValue v;
  for (const auto& c : j) v.coords.push_back(parse_rational(c.get<std::string>()));
  return v;
}

Json to_json(const Factorization& z) {
  Json a = Json::array();
  for (const auto& [k, c] : z.pairs()) a.push_back(Json::array({k, c}));
  return a;
}

Factorization factorization_from_json(const Json& j) {
  std::vector<std::pair<unsigned, std::uint64_t>> pairs;
  for (const auto& p : j) pairs.emplace_back(p.at(0).get<unsigned>(), p.at(1).get<std::uint64_t>());
  return Factorization::from_pairs(pairs);
}

Json to_json(const LengthSet& s) {
  Json j;
  Json runs = Json::array();
  for (const auto& [a, b] : s.runs()) runs.push_back(Json::array({a, b}));
  j["runs"] = runs;
  j["size"] = s.size();
  j["text"] = s.to_string();
  return j;
}

LengthSet length_set_from_json(const Json& j) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
  for (const auto& r : j.at("runs")) runs.emplace_back(r.at(0).get<std::uint64_t>(), r.at(1).get<std::uint64_t>());
  return LengthSet::from_runs(std::move(runs));
}

Json to_json(const BoundsUsed& b) {
  Json j;
  j["max_exponent"] = b.max_exponent;
  j["cap"] = b.cap ? Json(*b.cap) : Json(nullptr);
  j["node_budget"] = b.node_budget;
  return j;
}

Json to_json(const std::vector<AtomVerdict>& atoms) {
  Json a = Json::array();
  for (const auto& v : atoms) {
    Json j;
    j["exponent"] = v.exponent;
    j["is_atom"] = v.is_atom;
    j["definitive"] = v.definitive;
    if (!v.refutation.empty()) j["refutation"] = to_json(Factorization(v.refutation));
    j["certificate"] = v.certificate;
    a.push_back(j);
  }
  return a;
}

Json to_json(const FactorizationSetResult& r) {
  Json j;
  Json fs = Json::array();
  for (const auto& z : r.factorizations) fs.push_back({{"factorization", to_json(z)}, {"length", z.length()}});
  j["factorizations"] = fs;
  j["count"] = r.factorizations.size();
  j["complete"] = r.complete;
  j["budget_exhausted"] = r.budget_exhausted;
  j["truncated"] = r.truncated;
  j["nodes"] = r.nodes;
  j["bounds_used"] = to_json(r.bounds_used);
  return j;
}

Json to_json(const LengthSetResult& r) {
  Json j;
  j["lengths"] = to_json(r.lengths);
  j["complete"] = r.complete;
  j["budget_exhausted"] = r.budget_exhausted;
  j["states"] = r.states;
  j["bounds_used"] = to_json(r.bounds_used);
  return j;
}

Json to_json(const AapDecomposition& a) {
  return {{"c", a.c},         {"d", a.d},           {"N", a.N},
          {"s_prime", a.s_prime}, {"s_star", a.s_star}, {"s_double", a.s_double}};
}

Json to_json(const LengthSetReport& r) {
  Json j;
  j["lengths"] = to_json(r.lengths);
  j["is_ap"] = r.is_ap;
  j["difference"] = r.difference ? Json(*r.difference) : Json(nullptr);
  j["aap"] = r.aap ? to_json(*r.aap) : Json(nullptr);
  j["complete"] = r.complete;
  return j;
}

Json to_json(const CatenaryResult& r) {
  return {{"catenary", r.value}, {"complete", r.complete}, {"lower_bound_only", !r.complete},
          {"factorizations", r.factorizations}};
}

Json to_json(const BettiReport& r) {
  Json j;
  j["element"] = to_json(r.element);
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json list = Json::array();
    for (const auto& z : c) list.push_back(to_json(z));
    comps.push_back(list);
  }
  j["components"] = comps;
  j["component_count"] = r.components.size();
  j["is_betti"] = r.is_betti;
  j["complete"] = r.complete;
  return j;
}

Json to_json(const ScannedElement& e) {
  return {{"value", to_json(e.value)}, {"expr", to_string(e.expr.poly())}};
}

Json to_json(const CatenaryScanResult& r) {
  Json j;
  j["observed_sup"] = r.observed_sup;
  j["argmax"] = r.argmax ? to_json(*r.argmax) : Json(nullptr);
  Json h = Json::object();
  for (const auto& [c, n] : r.histogram) h[std::to_string(c)] = n;
  j["histogram"] = h;
  j["formula"] = r.formula ? Json(*r.formula) : Json(nullptr);
  j["formula_holds"] = r.formula_holds;
  j["elements"] = r.elements;
  j["complete"] = r.complete;
  return j;
}

Json to_json(const BettiScanResult& r) {
  Json j;
  Json b = Json::array();
  for (const auto& e : r.betti) b.push_back(to_json(e));
  j["betti"] = b;
  if (r.has_formula) {
    Json f = Json::array();
    for (const auto& e : r.formula) f.push_back(to_json(e));
    j["formula"] = f;
    j["formula_matches"] = r.formula_matches;
  } else {
    j["formula"] = nullptr;
  }
  j["elements"] = r.elements;
  j["complete"] = r.complete;
  return j;
}

Json to_json(const FurcusWitness& w) {
  Json j;
  j["found"] = w.found;
  if (w.found) {
    j["expr"] = to_string(w.expr->poly());
    j["element"] = to_json(w.element);
    j["lengths"] = to_json(w.lengths);
    j["min_length"] = w.lengths.min();
  }
  j["candidates"] = w.candidates;
  return j;
}

Json to_json(const LiftedLengths& l) {
  Json j;
  j["lengths"] = to_json(l.lengths);
  Json c = Json::array();
  for (const auto& s : l.components) c.push_back(to_json(s));
  j["components"] = c;
  j["complete"] = l.complete;
  return j;
}

}  // namespace mfactor::report
