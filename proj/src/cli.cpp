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

#include "mfactor/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include "mfactor/reproduce.hpp"

namespace mfactor::cli {

namespace {

using report::Json;

struct Options {
  // spec
  std::string q, root, min_poly;
  unsigned n = 0;
  int root_index = -1;
  // bounds
  std::optional<unsigned> D;
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> max_results;
  // output
  bool json = false;
  bool require_complete = false;
  unsigned workers = 0;
  // per command
  std::string element;
  unsigned K = 7;
  bool scan = false;
  unsigned max_exponent = 4;
  std::uint64_t max_coefficient = 4;
  std::optional<std::uint64_t> aap_d, aap_N;
  std::uint64_t max_N = 8;
  bool lifted = false;
  std::uint64_t k = 0;
  std::uint64_t search_budget = kDefaultFurcusBudget;
  bool all = false, list = false;
  std::vector<std::string> cases;
};

struct Incomplete {};

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string(kBudgetEnv) + " must be a positive integer, got \"" + env + "\"");
  }
  return kDefaultNodeBudget;
}

void add_spec_flags(CLI::App* sub, Options& o) {
  auto* oq = sub->add_option("--q", o.q, "rational q for N0[q], e.g. 3/2");
  auto* oroot = sub->add_option("--root", o.root, "rational q for N0[q^(1/n)]");
  auto* on = sub->add_option("--n", o.n, "root order for --root");
  auto* omp = sub->add_option("--min-poly", o.min_poly, "minimal polynomial, e.g. \"X^4 - X^3 - X^2 - X + 1\"");
  auto* oidx = sub->add_option("--root-index", o.root_index, "positive root, 0 = smallest (default largest)");
  oq->excludes(oroot)->excludes(omp);
  oroot->excludes(omp);
  oroot->needs(on);
  on->needs(oroot);
  oidx->needs(omp);
}

void add_bound_flags(CLI::App* sub, Options& o) {
  sub->add_option("--D", o.D, "maximum exponent (default floor_log of the value when alpha > 1)");
  sub->add_option("--cap", o.cap, "uniform coefficient cap");
  sub->add_option("--budget", o.budget, std::string("node budget (default ") + kBudgetEnv + " or 10^7)");
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "emit one JSON object");
  sub->add_flag("--require-complete", o.require_complete, "exit 3 when the result is incomplete");
  sub->add_option("--workers", o.workers, "scan workers (0 = hardware)");
}

MonoidSpec resolve_spec(const Options& o) {
  const int chosen = !o.q.empty() + !o.root.empty() + !o.min_poly.empty();
  if (chosen != 1) throw ParseError("give exactly one of --q, --root with --n, --min-poly");
  if (!o.q.empty()) return make_rational_spec(parse_rational(o.q));
  if (!o.root.empty()) return make_root_spec(parse_rational(o.root), o.n);
  std::optional<int> idx;
  if (o.root_index >= 0) idx = o.root_index;
  return make_algebraic_spec(parse_int_polynomial(o.min_poly), idx);
}

Bounds resolve_bounds(const Options& o) {
  Bounds b;
  b.max_exponent = o.D;
  b.cap = o.cap;
  b.node_budget = o.budget ? *o.budget : default_budget();
  if (o.max_results) b.max_results = *o.max_results;
  return b;
}

std::string yes_no(const Flag& f) {
  std::string v = f.value ? (*f.value ? "true" : "false") : "unknown";
  std::string s = v + " [" + to_string(f.provenance) + "]";
  if (!f.rule.empty()) s += " " + f.rule;
  return s;
}

void print_spec(std::ostream& out, const MonoidSpec& s) {
  const auto mp = minimal_pair(s);
  out << "spec        " << describe(s) << "\n";
  out << "route       " << to_string(s.route) << "\n";
  out << "min_poly    " << to_string(s.min_poly) << "  (rank " << s.rank << ", irreducible: "
      << to_string(s.irreducibility.certificate) << ")\n";
  out << "alpha       " << s.alpha.decimal(10) << " in (" << to_string(s.alpha.lo()) << ", "
      << to_string(s.alpha.hi()) << "), root index " << s.alpha.root_index() << "\n";
  out << "minimal     p = " << to_string(mp.p) << ", q = " << to_string(mp.q) << "\n";
  out << "atoms       " << to_string(s.atoms.kind);
  if (s.atoms.kind == AtomKind::FiniteList) {
    out << " {";
    for (std::size_t i = 0; i < s.atoms.exponents.size(); ++i) out << (i ? ", " : "") << s.atoms.exponents[i];
    out << "}";
  }
  if (s.atoms.kind == AtomKind::BoundedUnknown) out << " (verified through " << s.atoms.verified_through << ")";
  out << "\n";
  out << "atomic      " << yes_no(s.classification.atomic) << "\n";
  out << "bfm         " << yes_no(s.classification.bfm) << "\n";
  out << "accp        " << yes_no(s.classification.accp) << "\n";
  out << "ufm         " << yes_no(s.classification.ufm) << "\n";
}

std::string coords_text(const CanonicalValue& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) s += (i ? ", " : "") + to_string(v.coords[i]);
  return s + ")";
}

std::string bounds_text(const BoundsUsed& b) {
  std::string s = "D = " + std::to_string(b.max_exponent);
  s += ", cap = " + (b.cap ? std::to_string(*b.cap) : std::string("none"));
  return s + ", budget = " + std::to_string(b.node_budget);
}

std::string complete_text(bool complete, bool exhausted) {
  if (complete) return "complete";
  return exhausted ? "INCOMPLETE (budget exhausted)" : "within bounds only (not certified complete)";
}

struct Emitter {
  const Options& o;
  std::ostream& out;
  Json doc;
  bool complete = true;

  Emitter(const Options& opts, std::ostream& os, const std::string& command) : o(opts), out(os) {
    doc["schema"] = report::kSchemaVersion;
    doc["command"] = command;
  }
  void spec(const MonoidSpec& s) {
    if (o.json) {
      doc["spec"] = report::to_json(s);
    } else {
      print_spec(out, s);
      out << "\n";
    }
  }
  int finish() {
    if (o.json) out << doc.dump(2) << "\n";
    if (o.require_complete && !complete) return kExitUndecided;
    return kExitOk;
  }
};

int cmd_spec(const Options& o, std::ostream& out) {
  Emitter e(o, out, "spec");
  e.spec(resolve_spec(o));
  return e.finish();
}

int cmd_atoms(const Options& o, std::ostream& out) {
  Emitter e(o, out, "atoms");
  const auto s = resolve_spec(o);
  e.spec(s);
  const auto v = atoms_up_to(s, o.K);
  for (const auto& a : v) e.complete = e.complete && a.definitive;
  if (o.json) {
    e.doc["result"] = {{"K", o.K}, {"atoms", report::to_json(v)}};
  } else {
    out << "atoms up to " << o.K << "\n";
    for (const auto& a : v) {
      out << "  a^" << a.exponent << "  " << (a.is_atom ? "atom" : "not an atom")
          << (a.definitive ? "" : " (within bound)");
      if (!a.refutation.empty()) out << "  = " << Factorization(a.refutation).to_string();
      out << "  [" << a.certificate << "]\n";
    }
  }
  return e.finish();
}

int cmd_factorize(const Options& o, std::ostream& out) {
  Emitter e(o, out, "factorize");
  const auto s = resolve_spec(o);
  e.spec(s);
  const auto x = ElementExpr::parse(o.element);
  const auto r = enumerate_factorizations(x, s, resolve_bounds(o));
  e.complete = r.complete;
  if (o.json) {
    e.doc["element"] = {{"expr", to_string(x.poly())}, {"value", report::to_json(canonicalize(x, s))}};
    e.doc["result"] = report::to_json(r);
  } else {
    out << "element     " << to_string(x.poly()) << " = " << coords_text(canonicalize(x, s)) << "\n";
    out << "bounds      " << bounds_text(r.bounds_used) << "\n";
    out << "status      " << complete_text(r.complete, r.budget_exhausted) << (r.truncated ? ", truncated" : "")
        << ", " << r.nodes << " nodes\n";
    out << "|Z(x)|      " << r.factorizations.size() << "\n";
    for (const auto& z : r.factorizations) out << "  [" << z.length() << "]  " << z.to_string() << "\n";
  }
  return e.finish();
}

int cmd_lengths(const Options& o, std::ostream& out) {
  Emitter e(o, out, "lengths");
  const auto s = resolve_spec(o);
  e.spec(s);
  const auto x = ElementExpr::parse(o.element);
  const auto r = length_set(x, s, resolve_bounds(o));
  e.complete = r.complete;
  LengthSetReport rep;
  if (!r.lengths.empty()) {
    rep = (o.aap_d && o.aap_N) ? ap_aap_analyze(r.lengths, *o.aap_d, *o.aap_N) : ap_aap_infer(r.lengths, o.max_N);
  } else {
    rep.lengths = r.lengths;
  }
  rep.complete = r.complete;
  std::optional<LiftedLengths> lift;
  if (o.lifted) lift = lifted_length_set(x, s, resolve_bounds(o));
  if (o.json) {
    e.doc["element"] = {{"expr", to_string(x.poly())}, {"value", report::to_json(canonicalize(x, s))}};
    Json res = report::to_json(r);
    res["analysis"] = report::to_json(rep);
    if (lift) {
      res["lifted"] = report::to_json(*lift);
      res["lifted_matches"] = lift->lengths == r.lengths;
    }
    e.doc["result"] = res;
  } else {
    out << "element     " << to_string(x.poly()) << " = " << coords_text(canonicalize(x, s)) << "\n";
    out << "bounds      " << bounds_text(r.bounds_used) << "\n";
    out << "status      " << complete_text(r.complete, r.budget_exhausted) << ", " << r.states << " states\n";
    out << "L(x)        " << r.lengths.to_string() << "\n";
    if (!r.lengths.empty()) {
      out << "AP          " << (rep.is_ap ? "yes" : "no");
      if (rep.is_ap && rep.difference) out << ", difference " << *rep.difference;
      out << "\n";
      out << "AAP         ";
      if (rep.aap) {
        out << "d = " << rep.aap->d << ", N = " << rep.aap->N << ", c = " << rep.aap->c << ", |S'| = "
            << rep.aap->s_prime.size() << ", |S*| = " << rep.aap->s_star.size() << ", |S''| = "
            << rep.aap->s_double.size() << "\n";
      } else {
        out << "none" << ((o.aap_d && o.aap_N) ? "" : " with N <= " + std::to_string(o.max_N)) << "\n";
      }
    }
    if (lift) {
      out << "lifted      " << lift->lengths.to_string() << (lift->lengths == r.lengths ? " (matches)" : " (DIFFERS)")
          << "\n";
    }
  }
  return e.finish();
}

ScanOptions scan_options(const Options& o) {
  ScanOptions so;
  so.max_exponent = o.max_exponent;
  so.max_coefficient = o.max_coefficient;
  so.bounds = resolve_bounds(o);
  so.workers = o.workers;
  return so;
}

int cmd_betti(const Options& o, std::ostream& out) {
  Emitter e(o, out, "betti");
  const auto s = resolve_spec(o);
  e.spec(s);
  if (o.scan) {
    const auto r = betti_scan(s, scan_options(o));
    e.complete = r.complete;
    if (o.json) {
      e.doc["result"] = report::to_json(r);
    } else {
      out << "scan        exponents 0.." << o.max_exponent << ", coefficients 0.." << o.max_coefficient << ", "
          << r.elements << " distinct elements, " << complete_text(r.complete, false) << "\n";
      out << "betti       " << r.betti.size() << " found\n";
      for (const auto& b : r.betti) out << "  " << coords_text(b.value) << "  = " << to_string(b.expr.poly()) << "\n";
      if (r.has_formula) out << "formula     " << (r.formula_matches ? "matches" : "DOES NOT MATCH") << "\n";
    }
    return e.finish();
  }
  const auto x = ElementExpr::parse(o.element);
  const auto r = betti_graph(x, s, resolve_bounds(o));
  e.complete = r.complete;
  if (o.json) {
    e.doc["element"] = {{"expr", to_string(x.poly())}, {"value", report::to_json(r.element)}};
    e.doc["result"] = report::to_json(r);
  } else {
    out << "element     " << to_string(x.poly()) << " = " << coords_text(r.element) << "\n";
    out << "status      " << complete_text(r.complete, false) << "\n";
    out << "components  " << r.components.size() << "\n";
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      out << "  #" << i + 1 << ":";
      for (const auto& z : r.components[i]) out << "  " << z.to_string() << ";";
      out << "\n";
    }
    out << "betti       " << (r.is_betti ? "yes" : "no") << "\n";
  }
  return e.finish();
}

int cmd_catenary(const Options& o, std::ostream& out) {
  Emitter e(o, out, "catenary");
  const auto s = resolve_spec(o);
  e.spec(s);
  if (o.scan) {
    const auto r = catenary_monoid_scan(s, scan_options(o));
    e.complete = r.complete;
    if (o.json) {
      e.doc["result"] = report::to_json(r);
    } else {
      out << "scan        exponents 0.." << o.max_exponent << ", coefficients 0.." << o.max_coefficient << ", "
          << r.elements << " distinct elements, " << complete_text(r.complete, false) << "\n";
      out << "sup c(x)    " << r.observed_sup;
      if (r.argmax) out << " at " << coords_text(r.argmax->value) << " = " << to_string(r.argmax->expr.poly());
      out << "\n";
      out << "histogram  ";
      for (const auto& [c, n] : r.histogram) out << " " << c << ":" << n;
      out << "\n";
      if (r.formula)
        out << "formula     max(n, d) = " << *r.formula << (r.formula_holds ? " (holds)" : " (EXCEEDED)") << "\n";
    }
    return e.finish();
  }
  const auto x = ElementExpr::parse(o.element);
  const auto r = catenary_element(x, s, resolve_bounds(o));
  e.complete = r.complete;
  if (o.json) {
    e.doc["element"] = {{"expr", to_string(x.poly())}, {"value", report::to_json(canonicalize(x, s))}};
    e.doc["result"] = report::to_json(r);
  } else {
    out << "element     " << to_string(x.poly()) << " = " << coords_text(canonicalize(x, s)) << "\n";
    out << "|Z(x)|      " << r.factorizations << "\n";
    out << "c(x)        " << r.value << (r.complete ? "" : " (lower bound: enumeration not complete)") << "\n";
  }
  return e.finish();
}

int cmd_furcus(const Options& o, std::ostream& out) {
  Emitter e(o, out, "furcus");
  const auto s = resolve_spec(o);
  e.spec(s);
  const auto w = furcus_witness(s, o.k, o.search_budget, resolve_bounds(o));
  e.complete = w.found;
  if (o.json) {
    e.doc["k"] = o.k;
    e.doc["result"] = report::to_json(w);
  } else {
    out << "k           " << o.k << "\n";
    if (w.found) {
      out << "witness     " << to_string(w.expr->poly()) << " = " << coords_text(w.element) << "\n";
      out << "L(x)        " << w.lengths.to_string() << ", min " << w.lengths.min() << " > " << o.k << "\n";
    } else {
      out << "witness     none found among " << w.candidates << " candidates (not a disproof)\n";
    }
  }
  return e.finish();
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  const auto infos = reproduce_cases();
  if (o.list) {
    for (const auto& c : infos) out << std::left << std::setw(18) << c.id << " " << c.title << "\n";
    return kExitOk;
  }
  std::vector<std::string> ids = o.cases;
  if (o.all)
    for (const auto& c : infos) ids.push_back(c.id);
  if (ids.empty()) throw ParseError("reproduce needs --all, --case ID or --list");
  Json doc;
  doc["schema"] = report::kSchemaVersion;
  doc["command"] = "reproduce";
  Json results = Json::array();
  bool all_ok = true;
  for (const auto& id : ids) {
    const auto r = run_case(id, o.workers);
    all_ok = all_ok && r.passed;
    if (o.json) {
      results.push_back(to_json(r));
    } else {
      out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(18) << r.id << " " << std::fixed
          << std::setprecision(2) << r.seconds << "s  " << r.title << "\n";
      for (const auto& c : r.checks) out << "      " << (c.passed ? "ok    " : "FAILED") << " " << c.what << "\n";
    }
  }
  if (o.json) {
    doc["cases"] = results;
    doc["passed"] = all_ok;
    out << doc.dump(2) << "\n";
  } else {
    out << (all_ok ? "all cases passed" : "some cases FAILED") << "\n";
  }
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Factorization invariants of N0[alpha] in exact arithmetic", "monoid-factor"};
  app.require_subcommand(1);

  auto* spec = app.add_subcommand("spec", "resolve and classify a monoid");
  add_spec_flags(spec, o);
  add_output_flags(spec, o);

  auto* atoms = app.add_subcommand("atoms", "which alpha^k, k <= K, are atoms");
  add_spec_flags(atoms, o);
  add_output_flags(atoms, o);
  atoms->add_option("--K", o.K, "largest exponent tested (default 7)");

  auto* fact = app.add_subcommand("factorize", "all factorizations of an element");
  add_spec_flags(fact, o);
  add_bound_flags(fact, o);
  add_output_flags(fact, o);
  fact->add_option("--element", o.element, "N0[X] expression, e.g. \"X^5 + 6X^2\"")->required();
  fact->add_option("--max-results", o.max_results, "stop after this many factorizations");

  auto* lengths = app.add_subcommand("lengths", "set of lengths with AP/AAP analysis");
  add_spec_flags(lengths, o);
  add_bound_flags(lengths, o);
  add_output_flags(lengths, o);
  lengths->add_option("--element", o.element, "N0[X] expression")->required();
  auto* od = lengths->add_option("--aap-d", o.aap_d, "AAP difference to test");
  auto* oN = lengths->add_option("--aap-N", o.aap_N, "AAP bound to test");
  od->needs(oN);
  oN->needs(od);
  lengths->add_option("--max-N", o.max_N, "largest AAP bound tried when inferring (default 8)");
  lengths->add_flag("--lifted", o.lifted, "also compute through the root lift (--root specs)");

  auto* betti = app.add_subcommand("betti", "Betti graph of an element, or a Betti scan");
  add_spec_flags(betti, o);
  add_bound_flags(betti, o);
  add_output_flags(betti, o);
  auto* be = betti->add_option("--element", o.element, "N0[X] expression");
  auto* bs = betti->add_flag("--scan", o.scan, "scan all small elements");
  be->excludes(bs);
  betti->add_option("--max-exponent", o.max_exponent, "scan exponents 0..E (default 6)");
  betti->add_option("--max-coefficient", o.max_coefficient, "scan coefficients 0..C (default 8)");

  auto* cat = app.add_subcommand("catenary", "catenary degree of an element, or a monoid scan");
  add_spec_flags(cat, o);
  add_bound_flags(cat, o);
  add_output_flags(cat, o);
  auto* ce = cat->add_option("--element", o.element, "N0[X] expression");
  auto* cs = cat->add_flag("--scan", o.scan, "scan all small elements");
  ce->excludes(cs);
  cat->add_option("--max-exponent", o.max_exponent, "scan exponents 0..E (default 4)");
  cat->add_option("--max-coefficient", o.max_coefficient, "scan coefficients 0..C (default 4)");

  auto* furcus = app.add_subcommand("furcus", "an element with every factorization longer than k");
  add_spec_flags(furcus, o);
  add_bound_flags(furcus, o);
  add_output_flags(furcus, o);
  furcus->add_option("--k", o.k, "length threshold")->required();
  furcus->add_option("--search-budget", o.search_budget, "natural numbers tried first (default 2000)");

  auto* repro = app.add_subcommand("reproduce", "replay the golden cases");
  repro->add_flag("--all", o.all, "every case");
  repro->add_option("--case", o.cases, "case id (repeatable)");
  repro->add_flag("--list", o.list, "list case ids");
  repro->add_flag("--json", o.json, "emit one JSON object");
  repro->add_option("--workers", o.workers, "scan workers (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "monoid-factor: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (spec->parsed()) return cmd_spec(o, out);
    if (atoms->parsed()) return cmd_atoms(o, out);
    if (fact->parsed()) return cmd_factorize(o, out);
    if (lengths->parsed()) return cmd_lengths(o, out);
    if (betti->parsed()) {
      if (!o.scan && o.element.empty()) throw ParseError("betti needs --element or --scan");
      if (o.scan && betti->count("--max-exponent") == 0) o.max_exponent = 6;
      if (o.scan && betti->count("--max-coefficient") == 0) o.max_coefficient = 8;
      return cmd_betti(o, out);
    }
    if (cat->parsed()) {
      if (!o.scan && o.element.empty()) throw ParseError("catenary needs --element or --scan");
      return cmd_catenary(o, out);
    }
    if (furcus->parsed()) return cmd_furcus(o, out);
    if (repro->parsed()) return cmd_reproduce(o, out);
  } catch (const ParseError& e) {
    err << "monoid-factor: parse error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DomainError& e) {
    err << "monoid-factor: invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const UndecidedError& e) {
    err << "monoid-factor: undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const UnsupportedError& e) {
    err << "monoid-factor: unsupported: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    err << "monoid-factor: error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace mfactor::cli
