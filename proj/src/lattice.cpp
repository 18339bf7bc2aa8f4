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

#include "lattice.hpp"

#include <set>

namespace mfactor::detail {

BigInt dot(const Vec& a, const Vec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void axpy(Vec& y, const BigInt& a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Vec primitive(Vec v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

Hnf hermite_normal_form(const std::vector<Vec>& gens, std::size_t dim) {
  std::vector<Vec> rows;
  for (const auto& g : gens)
    if (!is_zero(g)) rows.push_back(g);
  Hnf h;
  h.dim = dim;
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < rows.size(); ++col) {
    // Euclid on column col among rows[top..]
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const BigInt qt = floor_div(rows[i][col], rows[top][col]);
        axpy(rows[i], -qt, rows[top]);
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t i = 0; i < top; ++i) {
      const BigInt qt = floor_div(rows[i][col], rows[top][col]);
      if (qt != 0) axpy(rows[i], -qt, rows[top]);
    }
    h.pivots.push_back(col);
    ++top;
    // drop rows that became zero
    std::vector<Vec> kept(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(top));
    for (std::size_t i = top; i < rows.size(); ++i)
      if (!is_zero(rows[i])) kept.push_back(std::move(rows[i]));
    rows = std::move(kept);
  }
  rows.resize(top);
  h.rows = std::move(rows);
  return h;
}

bool lattice_contains(const Hnf& h, Vec w) {
  for (std::size_t k = 0; k < h.rows.size(); ++k) {
    const BigInt& p = h.rows[k][h.pivots[k]];
    const BigInt& x = w[h.pivots[k]];
    if (x == 0) continue;
    if (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) == 0) return false;
    axpy(w, -BigInt(x / p), h.rows[k]);
  }
  return is_zero(w);
}

BigInt pivot_product(const Hnf& h) {
  BigInt p = 1;
  for (std::size_t k = 0; k < h.rows.size(); ++k) p *= h.rows[k][h.pivots[k]];
  return p;
}

bool in_span(const Hnf& h, const Vec& v) {
  // rational elimination against the echelon rows
  std::vector<BigRational> w(v.begin(), v.end());
  for (std::size_t k = 0; k < h.rows.size(); ++k) {
    const BigRational f = w[h.pivots[k]] / BigRational(h.rows[k][h.pivots[k]]);
    if (f == 0) continue;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= f * h.rows[k][i];
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

Vec orthogonal_witness(const Hnf& h, const Vec& v) {
  const std::size_t s = h.rows.size();
  const std::size_t n = v.size();
  // Gram system (H H^T) a = H v, then y = v - H^T a.
  std::vector<std::vector<BigRational>> g(s, std::vector<BigRational>(s + 1));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) g[i][j] = dot(h.rows[i], h.rows[j]);
    g[i][s] = dot(h.rows[i], v);
  }
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t p = c;
    while (g[p][c] == 0) ++p;  // the Gram matrix of independent rows is nonsingular
    std::swap(g[p], g[c]);
    for (std::size_t i = 0; i < s; ++i) {
      if (i == c || g[i][c] == 0) continue;
      const BigRational f = g[i][c] / g[c][c];
      for (std::size_t j = c; j <= s; ++j) g[i][j] -= f * g[c][j];
    }
  }
  std::vector<BigRational> y(v.begin(), v.end());
  for (std::size_t i = 0; i < s; ++i) {
    const BigRational a = g[i][s] / g[i][i];
    for (std::size_t j = 0; j < n; ++j) y[j] -= a * h.rows[i][j];
  }
  BigInt den = 1;
  for (const auto& x : y) den = lcm(den, x.get_den());
  Vec out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = BigRational(y[j] * den).get_num();
  out = primitive(std::move(out));
  if (is_zero(out)) throw DomainError("orthogonal witness requested for a vector inside the span");
  return out;
}

BigInt determinant(std::vector<Vec> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<std::vector<Vec>> cone_facets(const std::vector<Vec>& gens, const Hnf& h,
                                            std::size_t combination_limit) {
  const std::size_t s = h.rows.size();
  if (s == 0) return std::vector<Vec>{};
  std::vector<Vec> proj;
  proj.reserve(gens.size());
  for (const auto& g : gens) {
    Vec p(s);
    for (std::size_t k = 0; k < s; ++k) p[k] = g[h.pivots[k]];
    proj.push_back(std::move(p));
  }
  const std::size_t choose = s - 1;
  // number of subsets, with early exit past the limit
  {
    BigInt count = 1;
    for (std::size_t i = 0; i < choose; ++i) {
      count *= static_cast<unsigned long>(gens.size() - i);
      count /= static_cast<unsigned long>(i + 1);
    }
    if (count > combination_limit) return std::nullopt;
  }
  std::set<Vec> found;
  std::vector<std::size_t> idx(choose);
  for (std::size_t i = 0; i < choose; ++i) idx[i] = i;
  if (choose > gens.size()) return std::vector<Vec>{};
  for (;;) {
    Vec normal(s);
    for (std::size_t j = 0; j < s; ++j) {
      std::vector<Vec> minor;
      for (std::size_t r = 0; r < choose; ++r) {
        Vec row;
        for (std::size_t c = 0; c < s; ++c)
          if (c != j) row.push_back(proj[idx[r]][c]);
        minor.push_back(std::move(row));
      }
      normal[j] = determinant(std::move(minor));
      if (j % 2 == 1) normal[j] = -normal[j];
    }
    if (!is_zero(normal)) {
      bool nonneg = true, nonpos = true;
      for (const auto& p : proj) {
        const int sg = sgn(dot(normal, p));
        if (sg < 0) nonneg = false;
        if (sg > 0) nonpos = false;
      }
      if (nonneg || nonpos) {
        if (!nonneg)
          for (auto& x : normal) x = -x;
        found.insert(primitive(std::move(normal)));
      }
    }
    // next combination
    std::size_t i = choose;
    while (i > 0 && idx[i - 1] == gens.size() - choose + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < choose; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<Vec> out;
  for (const auto& f : found) {
    Vec full(h.dim);
    for (std::size_t k = 0; k < s; ++k) full[h.pivots[k]] = f[k];
    out.push_back(std::move(full));
  }
  return out;
}

}  // namespace mfactor::detail
