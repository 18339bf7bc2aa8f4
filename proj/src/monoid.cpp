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

#include "mfactor/monoid.hpp"

#include "engine.hpp"

namespace mfactor {

std::string to_string(Route r) {
  switch (r) {
    case Route::RationalCyclic: return "rational-cyclic";
    case Route::IrreducibleRoot: return "irreducible-root";
    case Route::AlgebraicEval: return "algebraic-eval";
  }
  return "unknown";
}

std::string to_string(AtomKind k) {
  switch (k) {
    case AtomKind::AllPowers: return "all-powers";
    case AtomKind::FiniteList: return "finite-list";
    case AtomKind::BoundedUnknown: return "bounded-unknown";
  }
  return "unknown";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::CitedRule: return "cited-rule";
    case Provenance::Computed: return "computed";
    case Provenance::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// alpha^k in the monoid generated by alpha^0 .. alpha^(k-1); alpha > 1 makes
// this the full test for "alpha^k is not an atom".
struct LowerPowerTest {
  bool decomposable = false;
  bool decided = true;
  std::vector<std::uint64_t> witness;  // counts by exponent
};

LowerPowerTest lower_power_test(const MonoidSpec& spec, unsigned k) {
  LowerPowerTest t;
  if (k == 0) return t;
  std::vector<unsigned> gens(k);
  for (unsigned j = 0; j < k; ++j) gens[j] = j;
  detail::Problem p(spec, gens, k, std::nullopt);
  const auto table = detail::power_coordinates(spec.min_poly, k);
  detail::SearchLimits limits;
  limits.max_results = 1;
  const auto out = detail::search(p, *p.scale(table[k]), limits);
  if (!out.solutions.empty()) {
    t.decomposable = true;
    t.witness.assign(k, 0);
    for (std::size_t i = 0; i < gens.size(); ++i) t.witness[gens[i]] = out.solutions[0][i];
    while (!t.witness.empty() && t.witness.back() == 0) t.witness.pop_back();
  } else if (out.budget_exhausted) {
    t.decided = false;
  }
  return t;
}

// a X^d - b with a, b > 0
struct Binomial {
  BigInt a, b;
  unsigned d = 0;
};

std::optional<Binomial> as_binomial(const IntPolynomial& m) {
  if (m.degree() < 1) return std::nullopt;
  for (int i = 1; i < m.degree(); ++i)
    if (m.coeff(static_cast<std::size_t>(i)) != 0) return std::nullopt;
  if (m.leading() <= 0 || m.coeff(0) >= 0) return std::nullopt;
  return Binomial{m.leading(), -m.coeff(0), static_cast<unsigned>(m.degree())};
}

bool is_prime(const BigInt& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0; }

// non-integer and not the reciprocal of an integer
bool generic_rational(const BigRational& q) { return q.get_den() != 1 && q.get_num() != 1; }

AtomDescription probe_atoms(const MonoidSpec& spec) {
  AtomDescription a;
  const unsigned K = atom_probe_bound(spec.rank);
  for (unsigned k = 1; k <= K; ++k) {
    const auto t = lower_power_test(spec, k);
    if (!t.decided) {
      a.kind = AtomKind::BoundedUnknown;
      a.verified_through = static_cast<int>(k) - 1;
      return a;
    }
    if (t.decomposable) {
      a.kind = AtomKind::FiniteList;
      for (unsigned j = 0; j < k; ++j) a.exponents.push_back(j);
      return a;
    }
  }
  a.kind = AtomKind::BoundedUnknown;
  a.verified_through = static_cast<int>(K);
  return a;
}

void finish(MonoidSpec& s) {
  s.alpha_gt_one = sign_at_root(IntPolynomial{BigInt(-1), BigInt(1)}, s.alpha) > 0;
  s.cache = std::make_shared<AtomCache>();
  s.cache->verified_through = s.atoms.verified_through;
  s.classification = classify(s);
}

}  // namespace

bool MonoidSpec::supports_enumeration() const {
  if (classification.atomic.value == false) return false;
  switch (atoms.kind) {
    case AtomKind::AllPowers: return true;
    case AtomKind::FiniteList: return !atoms.exponents.empty();
    case AtomKind::BoundedUnknown: return alpha_gt_one;
  }
  return false;
}

bool MonoidSpec::atoms_known_through(unsigned bound) const {
  switch (atoms.kind) {
    case AtomKind::AllPowers:
    case AtomKind::FiniteList: return true;
    case AtomKind::BoundedUnknown:
      return alpha_gt_one || atoms.verified_through >= static_cast<int>(bound);
  }
  return false;
}

std::vector<unsigned> MonoidSpec::atom_exponents(unsigned bound) const {
  std::vector<unsigned> out;
  if (classification.atomic.value == false) throw UnsupportedError("monoid is not atomic: " + describe(*this));
  switch (atoms.kind) {
    case AtomKind::AllPowers:
      for (unsigned k = 0; k <= bound; ++k) out.push_back(k);
      return out;
    case AtomKind::FiniteList:
      for (unsigned k : atoms.exponents)
        if (k <= bound) out.push_back(k);
      return out;
    case AtomKind::BoundedUnknown:
      break;
  }
  if (!alpha_gt_one) throw UnsupportedError("atoms unknown for alpha < 1 beyond the cited rules: " + describe(*this));
  std::lock_guard<std::mutex> lock(cache->mutex);
  while (!cache->first_non_atom && cache->verified_through < static_cast<int>(bound)) {
    const unsigned k = static_cast<unsigned>(cache->verified_through + 1);
    const auto t = lower_power_test(*this, k);
    if (!t.decided) throw UndecidedError("atom test for alpha^" + std::to_string(k) + " exhausted its budget");
    if (t.decomposable) {
      cache->first_non_atom = k;
    } else {
      cache->verified_through = static_cast<int>(k);
    }
  }
  const unsigned top = cache->first_non_atom ? std::min(bound + 1, *cache->first_non_atom) : bound + 1;
  for (unsigned k = 0; k < top; ++k) out.push_back(k);
  return out;
}

MonoidSpec make_rational_spec(const BigRational& q_in) {
  const BigRational q = make_rational(q_in.get_num(), q_in.get_den());
  if (q <= 0) throw DomainError("q must be positive, got " + to_string(q));
  MonoidSpec s;
  s.route = Route::RationalCyclic;
  s.q = q;
  s.n = 1;
  s.min_poly = IntPolynomial{-numer(q), denom(q)};
  s.alpha = AlgebraicNumber::rational(q);
  s.rank = 1;
  s.irreducibility = {true, IrreducibilityCertificate::Linear, std::nullopt, std::nullopt};
  if (denom(q) == 1) {
    s.atoms = {AtomKind::FiniteList, {0}, -1};
  } else if (numer(q) == 1) {
    s.atoms = {AtomKind::FiniteList, {}, -1};
  } else {
    s.atoms = {AtomKind::AllPowers, {}, -1};
  }
  finish(s);
  return s;
}

MonoidSpec make_root_spec(const BigRational& q_in, unsigned n) {
  const BigRational q = make_rational(q_in.get_num(), q_in.get_den());
  if (q <= 0) throw DomainError("q must be positive, got " + to_string(q));
  if (n < 2) throw DomainError("root order must be at least 2");
  for (const auto& p : prime_factors(BigInt(n))) {
    if (auto r = rational_root_of(q, p.get_ui()))
      throw DomainError(to_string(q) + " is a " + p.get_str() + "-th power (" + to_string(*r) +
                        "), so its " + std::to_string(n) + "-th root is not irreducible");
  }
  MonoidSpec s;
  s.route = Route::IrreducibleRoot;
  s.q = q;
  s.n = n;
  s.min_poly = normalize_primitive(IntPolynomial::monomial(denom(q), n) - IntPolynomial::constant(numer(q)));
  s.irreducibility = is_irreducible_over_q(s.min_poly);
  if (!s.irreducibility.irreducible) throw DomainError("x^n - q is reducible: " + to_string(s.min_poly));
  const auto roots = isolate_positive_roots(s.min_poly);
  if (roots.size() != 1) throw DomainError("expected exactly one positive root of " + to_string(s.min_poly));
  s.alpha = roots[0];
  s.rank = static_cast<int>(n);
  s.alpha_gt_one = q > 1;
  if (generic_rational(q) || as_binomial(s.min_poly)) {
    // the binomial rules give all powers whenever they apply; see classify
  }
  s.atoms = {AtomKind::BoundedUnknown, {}, -1};
  const auto b = as_binomial(s.min_poly);
  const bool cited_powers = generic_rational(q) || (b && ((is_prime(b->a) && b->a < b->b && b->b % b->a != 0) ||
                                                         (is_prime(b->b) && b->b < b->a && b->a % b->b != 0)));
  if (cited_powers) {
    s.atoms = {AtomKind::AllPowers, {}, -1};
  } else if (q > 1) {
    s.atoms = probe_atoms(s);
  }
  finish(s);
  return s;
}

MonoidSpec make_algebraic_spec(const IntPolynomial& m_in, std::optional<int> root_index) {
  if (m_in.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
  const IntPolynomial m = normalize_primitive(m_in);
  if (m.degree() == 1) {
    const BigRational root = make_rational(-m.coeff(0), m.coeff(1));
    if (root <= 0) throw DomainError("no positive real root: " + to_string(m));
    if (root_index && *root_index != 0) throw DomainError("root index out of range");
    return make_rational_spec(root);
  }
  MonoidSpec s;
  s.route = Route::AlgebraicEval;
  s.min_poly = m;
  s.irreducibility = is_irreducible_over_q(m);
  if (!s.irreducibility.irreducible) {
    std::string why = s.irreducibility.factor ? " (factor " + to_string(*s.irreducibility.factor) + ")" : "";
    throw DomainError("minimal polynomial is reducible over Q: " + to_string(m) + why);
  }
  const auto roots = isolate_positive_roots(m);
  if (roots.empty()) throw DomainError("no positive real root: " + to_string(m));
  const int idx = root_index.value_or(static_cast<int>(roots.size()) - 1);
  if (idx < 0 || idx >= static_cast<int>(roots.size()))
    throw DomainError("root index " + std::to_string(idx) + " out of range; " + std::to_string(roots.size()) +
                      " positive root(s)");
  s.alpha = roots[static_cast<std::size_t>(idx)];
  s.rank = m.degree();
  s.alpha_gt_one = sign_at_root(IntPolynomial{BigInt(-1), BigInt(1)}, s.alpha) > 0;

  s.atoms = {AtomKind::BoundedUnknown, {}, -1};
  bool cited_powers = false;
  if (const auto b = as_binomial(m)) {
    const BigRational q = make_rational(b->b, b->a);
    cited_powers = generic_rational(q) || (is_prime(b->a) && b->a < b->b && b->b % b->a != 0) ||
                   (is_prime(b->b) && b->b < b->a && b->a % b->b != 0);
  }
  if (cited_powers) {
    s.atoms = {AtomKind::AllPowers, {}, -1};
  } else if (s.alpha_gt_one) {
    s.atoms = probe_atoms(s);
  }
  finish(s);
  return s;
}

MinimalPair minimal_pair(const MonoidSpec& spec) {
  const IntPolynomial m = normalize_primitive(spec.min_poly);
  std::vector<BigInt> p(m.size()), q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const BigInt& c = m.coefficients()[i];
    if (c > 0) p[i] = c;
    if (c < 0) q[i] = -c;
  }
  return {IntPolynomial(std::move(p)), IntPolynomial(std::move(q))};
}

Classification classify(const MonoidSpec& spec) {
  Classification c;
  auto set = [](Flag& f, bool v, Provenance p, const std::string& rule) {
    if (!f.value) f = {v, p, rule};
  };
  const auto b = as_binomial(spec.min_poly);

  if (spec.route == Route::RationalCyclic) {
    const BigRational& q = spec.q;
    if (denom(q) == 1) {
      const std::string rule = "integer q: N0[q] = N0";
      set(c.ufm, true, Provenance::CitedRule, rule);
      set(c.bfm, true, Provenance::CitedRule, rule);
      set(c.accp, true, Provenance::CitedRule, rule);
      set(c.atomic, true, Provenance::CitedRule, rule);
    } else {
      set(c.atomic, numer(q) != 1, Provenance::CitedRule, "rational q: atomic iff 1/q is not an integer >= 2");
    }
  }
  if (b) {
    const BigRational q = make_rational(b->b, b->a);
    if (spec.route != Route::RationalCyclic && generic_rational(q))
      set(c.atomic, true, Provenance::CitedRule, "irreducible root of a rational: all powers are atoms");
    if (is_prime(b->a) && b->a < b->b && b->b % b->a != 0)
      set(c.accp, true, Provenance::CitedRule, "pX^d - c with p prime, p < c, p not dividing c: ACCP");
    if (is_prime(b->b) && b->b < b->a && b->a % b->b != 0) {
      const std::string rule = "cX^d - p with p prime, p < c, p not dividing c: atomic, not ACCP";
      set(c.atomic, true, Provenance::CitedRule, rule);
      set(c.accp, false, Provenance::CitedRule, rule);
    }
  }
  if (spec.alpha_gt_one) {
    const std::string rule = "alpha > 1: 0 is not a limit point, so BFM";
    set(c.bfm, true, Provenance::CitedRule, rule);
    set(c.accp, true, Provenance::CitedRule, rule);
    set(c.atomic, true, Provenance::CitedRule, rule);
  }
  // implications UFM => BFM => ACCP => atomic
  if (c.ufm.value == true) set(c.bfm, true, Provenance::CitedRule, "UFM implies BFM");
  if (c.bfm.value == true) set(c.accp, true, Provenance::CitedRule, "BFM implies ACCP");
  if (c.accp.value == true) set(c.atomic, true, Provenance::CitedRule, "ACCP implies atomic");
  if (c.accp.value == false) {
    set(c.bfm, false, Provenance::CitedRule, "not ACCP, so not BFM");
    set(c.ufm, false, Provenance::CitedRule, "not ACCP, so not UFM");
  }
  if (!c.ufm.value && c.atomic.value == true) {
    // p(alpha) = q(alpha) are two distinct factorizations when both sides use atoms
    const MinimalPair mp = minimal_pair(spec);
    const unsigned top = static_cast<unsigned>(std::max(mp.p.degree(), mp.q.degree()));
    bool atoms_ok = false;
    switch (spec.atoms.kind) {
      case AtomKind::AllPowers: atoms_ok = true; break;
      case AtomKind::FiniteList: {
        atoms_ok = true;
        for (auto k : mp.p.support())
          atoms_ok = atoms_ok && std::find(spec.atoms.exponents.begin(), spec.atoms.exponents.end(), k) !=
                                     spec.atoms.exponents.end();
        for (auto k : mp.q.support())
          atoms_ok = atoms_ok && std::find(spec.atoms.exponents.begin(), spec.atoms.exponents.end(), k) !=
                                     spec.atoms.exponents.end();
        break;
      }
      case AtomKind::BoundedUnknown: atoms_ok = spec.atoms.verified_through >= static_cast<int>(top); break;
    }
    if (atoms_ok) set(c.ufm, false, Provenance::Computed, "the minimal pair gives two distinct factorizations");
  }
  return c;
}

std::vector<AtomVerdict> atoms_up_to(const MonoidSpec& spec, unsigned K) {
  std::vector<AtomVerdict> out;
  if (spec.classification.atomic.value == false) {
    for (unsigned k = 0; k <= K; ++k) {
      AtomVerdict v;
      v.exponent = k;
      v.is_atom = false;
      v.definitive = true;
      v.certificate = "monoid is not atomic and has no atoms";
      out.push_back(std::move(v));
    }
    return out;
  }
  const bool cited_all = spec.atoms.kind == AtomKind::AllPowers;
  for (unsigned k = 0; k <= K; ++k) {
    AtomVerdict v;
    v.exponent = k;
    if (spec.alpha_gt_one) {
      const auto t = lower_power_test(spec, k);
      v.is_atom = !t.decomposable;
      v.definitive = t.decided;
      v.refutation = t.witness;
      v.certificate = t.decomposable ? "factorization through lower powers"
                                     : "no factorization through lower powers (alpha > 1 bounds every exponent)";
    } else {
      // alpha <= 1: search a bounded window for any other factorization
      const unsigned window = std::max(K, k) + 2 * static_cast<unsigned>(spec.rank) + 2;
      std::vector<unsigned> gens;
      for (unsigned j = 0; j <= window; ++j) gens.push_back(j);
      detail::Problem p(spec, gens, window, std::uint64_t{16});
      const auto table = detail::power_coordinates(spec.min_poly, window);
      detail::SearchLimits limits;
      limits.max_results = 2;
      const auto res = detail::search(p, *p.scale(table[k]), limits);
      v.is_atom = true;
      for (const auto& sol : res.solutions) {
        std::uint64_t len = 0;
        for (auto x : sol) len += x;
        if (len != 1 || sol[k] != 1) {
          v.is_atom = false;
          v.refutation.assign(sol.begin(), sol.end());
          while (!v.refutation.empty() && v.refutation.back() == 0) v.refutation.pop_back();
          break;
        }
      }
      v.definitive = !v.is_atom || cited_all;
      v.certificate = !v.is_atom ? "another factorization found"
                      : cited_all ? "all powers are atoms by the cited rule"
                                  : "atom within bound (exponents <= " + std::to_string(window) + ", coefficients <= 16)";
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string describe(const MonoidSpec& spec) {
  switch (spec.route) {
    case Route::RationalCyclic: return "N0[" + to_string(spec.q) + "]";
    case Route::IrreducibleRoot:
      return "N0[(" + to_string(spec.q) + ")^(1/" + std::to_string(spec.n) + ")]";
    case Route::AlgebraicEval:
      return "N0[alpha], alpha ~ " + spec.alpha.decimal(6) + " root of " + to_string(spec.min_poly);
  }
  return "N0[?]";
}

}  // namespace mfactor
