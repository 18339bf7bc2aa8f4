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

#include <algorithm>
#include <cstdint>

#include "mfactor/exact.hpp"

namespace mfactor {
namespace {

constexpr unsigned long kTrialDivisionLimit = 1'000'000;
constexpr std::uint64_t kKroneckerCombinationLimit = 20'000'000;

struct PrimePower {
  BigInt prime;
  unsigned exponent;
};

// Full factorization of |n| (n != 0), or nullopt if a cofactor beyond the
// trial-division limit is composite.
std::optional<std::vector<PrimePower>> factor_integer(const BigInt& n) {
  BigInt m = abs(n);
  std::vector<PrimePower> out;
  auto strip = [&](unsigned long p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) return;
    PrimePower pp{BigInt(p), 0};
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      m /= p;
      ++pp.exponent;
    }
    out.push_back(pp);
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialDivisionLimit; p += 2) {
    if (m == 1) break;
    if (BigInt(p) * p > m) break;
    strip(p);
  }
  if (m > 1) {
    if (BigInt(kTrialDivisionLimit) * kTrialDivisionLimit >= m || mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
      out.push_back({m, 1});
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<BigInt> positive_divisors(const std::vector<PrimePower>& f) {
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& pp : f) {
    const std::size_t base = divs.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

IntPolynomial reversed(const IntPolynomial& f) {
  std::vector<BigInt> v(f.coefficients().rbegin(), f.coefficients().rend());
  return IntPolynomial(std::move(v));
}

bool eisenstein_at(const IntPolynomial& f, const BigInt& p) {
  const auto& c = f.coefficients();
  if (c.empty() || f.degree() < 1) return false;
  if (c.back() % p == 0) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] % p != 0) return false;
  return c.front() % (p * p) != 0;
}

std::optional<BigInt> eisenstein_prime(const IntPolynomial& f) {
  if (f.coeff(0) == 0) return std::nullopt;
  auto fac = factor_integer(f.coeff(0));
  if (!fac) return std::nullopt;
  for (const auto& pp : *fac)
    if (eisenstein_at(f, pp.prime)) return pp.prime;
  return std::nullopt;
}

bool is_binomial(const IntPolynomial& f) {
  if (f.degree() < 2 || f.coeff(0) == 0) return false;
  for (int i = 1; i < f.degree(); ++i)
    if (f.coeff(static_cast<std::size_t>(i)) != 0) return false;
  return true;
}

// aX^n + b with b != 0: irreducible iff r = -b/a is not a p-th power for any
// prime p | n and, when 4 | n, r is not of the form -4c^4.
IrreducibilityResult binomial_verdict(const IntPolynomial& f) {
  const auto n = static_cast<unsigned long>(f.degree());
  const BigRational r = make_rational(-f.coeff(0), f.leading());
  auto nf = factor_integer(BigInt(n));
  for (const auto& pp : *nf) {
    const unsigned long p = pp.prime.get_ui();
    if (auto s = rational_root_of(r, p)) {
      // X^(n/p) - s divides X^n - s^p
      const IntPolynomial factor = normalize_primitive(IntPolynomial(
          std::vector<BigInt>{-numer(*s)}) + IntPolynomial::monomial(denom(*s), n / p));
      return {false, IrreducibilityCertificate::ExplicitFactor, factor, std::nullopt};
    }
  }
  if (n % 4 == 0 && r < 0) {
    if (auto c = rational_root_of(BigRational(-r / 4), 4)) {
      // X^(4m) + 4c^4 = (X^(2m) + 2cX^m + 2c^2)(X^(2m) - 2cX^m + 2c^2)
      const unsigned long m = n / 4;
      const RatPolynomial g = RatPolynomial::monomial(BigRational(1), 2 * m) +
                              RatPolynomial::monomial(BigRational(2 * *c), m) +
                              RatPolynomial::constant(BigRational(2 * *c * *c));
      return {false, IrreducibilityCertificate::ExplicitFactor, normalize_primitive(content_primitive(g).primitive),
              std::nullopt};
    }
  }
  return {true, IrreducibilityCertificate::Binomial, std::nullopt, std::nullopt};
}

std::optional<IntPolynomial> rational_root_factor(const IntPolynomial& f) {
  if (f.coeff(0) == 0) return IntPolynomial::x();
  auto a0 = factor_integer(f.coeff(0));
  auto an = factor_integer(f.leading());
  if (!a0 || !an) return std::nullopt;
  for (const auto& p : positive_divisors(*a0)) {
    for (const auto& q : positive_divisors(*an)) {
      if (gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        const BigRational root = make_rational(sign * p, q);
        if (evaluate(f, root) == 0) return IntPolynomial{BigInt(-sign * p), q};
      }
    }
  }
  return std::nullopt;
}

// Kronecker's method for factors of degree k: a factor h takes values
// h(x_i) | f(x_i) at k+1 points, which determines h by interpolation.
std::optional<IntPolynomial> kronecker_factor(const IntPolynomial& f, int k) {
  struct Point {
    BigInt x;
    BigInt value;
    std::vector<BigInt> divisors;
  };
  std::vector<Point> pts;
  const int radius = 3 * f.degree() + 6;
  for (int x = -radius; x <= radius; ++x) {
    const BigInt v = evaluate(f, BigRational(x)).get_num();
    if (v == 0) continue;
    auto fac = factor_integer(v);
    if (!fac) continue;
    pts.push_back({BigInt(x), v, positive_divisors(*fac)});
  }
  if (static_cast<int>(pts.size()) < k + 1) throw UndecidedError("not enough factorable evaluation points");
  std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.divisors.size() < b.divisors.size();
  });
  pts.resize(static_cast<std::size_t>(k + 1));

  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    combos *= pts[i].divisors.size() * (i == 0 ? 1 : 2);
    if (combos > kKroneckerCombinationLimit) throw UndecidedError("factor search exceeds combination limit");
  }

  // Integer Lagrange basis: W * l_i(X) with a common W.
  std::vector<RatPolynomial> basis;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    RatPolynomial l = RatPolynomial::constant(BigRational(1));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      const BigRational denom_ij(pts[i].x - pts[j].x);
      l *= RatPolynomial{BigRational(-pts[j].x) / denom_ij, BigRational(1) / denom_ij};
    }
    basis.push_back(std::move(l));
  }
  BigInt w = 1;
  for (const auto& l : basis)
    for (const auto& c : l.coefficients()) w = lcm(w, c.get_den());
  std::vector<std::vector<BigInt>> ibasis;
  for (const auto& l : basis) {
    std::vector<BigInt> row(static_cast<std::size_t>(k + 1));
    for (std::size_t d = 0; d < l.size(); ++d) row[d] = BigRational(l.coefficients()[d] * w).get_num();
    ibasis.push_back(std::move(row));
  }

  BigInt norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  BigInt bound2 = norm2;
  for (int i = 0; i < k; ++i) bound2 *= 4;  // (2^k ||f||_2)^2

  const std::size_t m = pts.size();
  std::vector<std::size_t> idx(m, 0);
  std::vector<int> sgn(m, 1);
  std::vector<BigInt> acc(static_cast<std::size_t>(k + 1));
  for (;;) {
    std::fill(acc.begin(), acc.end(), BigInt(0));
    for (std::size_t i = 0; i < m; ++i) {
      const BigInt v = sgn[i] * pts[i].divisors[idx[i]];
      for (std::size_t d = 0; d <= static_cast<std::size_t>(k); ++d) acc[d] += v * ibasis[i][d];
    }
    bool ok = acc.back() != 0;
    for (std::size_t d = 0; ok && d < acc.size(); ++d) ok = mpz_divisible_p(acc[d].get_mpz_t(), w.get_mpz_t()) != 0;
    if (ok) {
      std::vector<BigInt> h(acc.size());
      for (std::size_t d = 0; d < acc.size(); ++d) h[d] = acc[d] / w;
      for (const auto& c : h) ok = ok && c * c <= bound2;
      ok = ok && f.leading() % h.back() == 0 && h.front() != 0 && f.coeff(0) % h.front() == 0;
      if (ok) {
        IntPolynomial cand(std::move(h));
        if (divides(cand, f)) return normalize_primitive(cand);
      }
    }
    // odometer over divisor choices; the first point keeps a positive sign
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++idx[i] < pts[i].divisors.size()) break;
      idx[i] = 0;
      if (i > 0 && sgn[i] == 1) {
        sgn[i] = -1;
        break;
      }
      sgn[i] = 1;
    }
    if (i == m) break;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(IrreducibilityCertificate c) {
  switch (c) {
    case IrreducibilityCertificate::Linear: return "linear";
    case IrreducibilityCertificate::RationalRoot: return "rational-root";
    case IrreducibilityCertificate::ExplicitFactor: return "explicit-factor";
    case IrreducibilityCertificate::Eisenstein: return "eisenstein";
    case IrreducibilityCertificate::EisensteinReversed: return "eisenstein-reversed";
    case IrreducibilityCertificate::Binomial: return "binomial";
    case IrreducibilityCertificate::ExhaustiveSearch: return "exhaustive-search";
  }
  return "unknown";
}

std::vector<BigInt> prime_factors(const BigInt& n) {
  if (n == 0) throw DomainError("prime factors of zero");
  auto fac = factor_integer(n);
  if (!fac) throw UndecidedError("integer too large to factor: " + to_string(n));
  std::vector<BigInt> out;
  for (const auto& pp : *fac) out.push_back(pp.prime);
  return out;
}

std::optional<BigRational> rational_root_of(const BigRational& q, unsigned long p) {
  if (p == 0) return std::nullopt;
  if (q < 0 && p % 2 == 0) return std::nullopt;
  auto int_root = [p](const BigInt& a) -> std::optional<BigInt> {
    BigInt r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), p) == 0) return std::nullopt;
    return r;
  };
  auto num = int_root(abs(q.get_num()));
  auto den = int_root(q.get_den());
  if (!num || !den) return std::nullopt;
  return make_rational(q < 0 ? BigInt(-*num) : *num, *den);
}

IrreducibilityResult is_irreducible_over_q(const IntPolynomial& f, int max_search_degree) {
  if (f.degree() < 1) throw DomainError("irreducibility needs degree >= 1");
  const IntPolynomial g = normalize_primitive(f);
  if (g.degree() == 1) return {true, IrreducibilityCertificate::Linear, std::nullopt, std::nullopt};

  if (auto lin = rational_root_factor(g))
    return {false, IrreducibilityCertificate::RationalRoot, normalize_primitive(*lin), std::nullopt};

  if (is_binomial(g)) return binomial_verdict(g);

  if (auto p = eisenstein_prime(g)) return {true, IrreducibilityCertificate::Eisenstein, std::nullopt, *p};
  if (auto p = eisenstein_prime(reversed(g)))
    return {true, IrreducibilityCertificate::EisensteinReversed, std::nullopt, *p};

  if (g.degree() > max_search_degree)
    throw UndecidedError("irreducibility undecided at configured bound: degree " + std::to_string(g.degree()) +
                         " exceeds search limit " + std::to_string(max_search_degree));
  for (int k = 2; k <= g.degree() / 2; ++k)
    if (auto h = kronecker_factor(g, k)) return {false, IrreducibilityCertificate::ExplicitFactor, *h, std::nullopt};
  return {true, IrreducibilityCertificate::ExhaustiveSearch, std::nullopt, std::nullopt};
}

bool verify_certificate(const IntPolynomial& f, const IrreducibilityResult& r) {
  const IntPolynomial g = normalize_primitive(f);
  switch (r.certificate) {
    case IrreducibilityCertificate::Linear:
      return r.irreducible && g.degree() == 1;
    case IrreducibilityCertificate::RationalRoot:
    case IrreducibilityCertificate::ExplicitFactor:
      return !r.irreducible && r.factor && r.factor->degree() >= 1 && r.factor->degree() < g.degree() &&
             divides(*r.factor, g);
    case IrreducibilityCertificate::Eisenstein:
      return r.irreducible && r.prime && mpz_probab_prime_p(r.prime->get_mpz_t(), 30) > 0 && eisenstein_at(g, *r.prime);
    case IrreducibilityCertificate::EisensteinReversed:
      return r.irreducible && r.prime && mpz_probab_prime_p(r.prime->get_mpz_t(), 30) > 0 &&
             eisenstein_at(reversed(g), *r.prime);
    case IrreducibilityCertificate::Binomial:
      return r.irreducible && is_binomial(g) && binomial_verdict(g).irreducible;
    case IrreducibilityCertificate::ExhaustiveSearch: {
      if (!r.irreducible) return false;
      for (int k = 1; k <= g.degree() / 2; ++k)
        if (kronecker_factor(g, k)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace mfactor
