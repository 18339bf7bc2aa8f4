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

#include "mfactor/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mfactor {

Factorization fact_gcd(const Factorization& a, const Factorization& b) {
  const std::size_t n = std::min(a.counts().size(), b.counts().size());
  std::vector<std::uint64_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = std::min(a.counts()[i], b.counts()[i]);
  return Factorization(std::move(c));
}

std::uint64_t distance(const Factorization& a, const Factorization& b) {
  const auto& x = a.counts();
  const auto& y = b.counts();
  const std::size_t n = std::min(x.size(), y.size());
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < n; ++i) g += std::min(x[i], y[i]);
  return std::max(a.length() - g, b.length() - g);
}

std::uint64_t catenary_of(const std::vector<Factorization>& z) {
  const std::size_t n = z.size();
  if (n < 2) return 0;
  // Prim on the complete graph
  constexpr auto inf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> best(n, inf);
  std::vector<char> in(n, 0);
  best[0] = 0;
  std::uint64_t bottleneck = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!in[i] && (u == n || best[i] < best[u])) u = i;
    in[u] = 1;
    bottleneck = std::max(bottleneck, best[u]);
    for (std::size_t i = 0; i < n; ++i)
      if (!in[i]) best[i] = std::min(best[i], distance(z[u], z[i]));
  }
  return bottleneck;
}

CatenaryResult catenary_element(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds) {
  const auto z = enumerate_factorizations(x, spec, bounds);
  return {catenary_of(z.factorizations), z.complete, z.factorizations.size()};
}

CatenaryResult catenary_element(const ElementExpr& x, const MonoidSpec& spec, const Bounds& bounds) {
  const auto z = enumerate_factorizations(x, spec, bounds);
  return {catenary_of(z.factorizations), z.complete, z.factorizations.size()};
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<Factorization>> betti_components(const std::vector<Factorization>& z) {
  UnionFind uf(z.size());
  // gcd != 0 exactly when two factorizations share an atom
  std::vector<std::size_t> first_with;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const auto& c = z[i].counts();
    if (first_with.size() < c.size()) first_with.resize(c.size(), z.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      if (first_with[k] == z.size()) {
        first_with[k] = i;
      } else {
        uf.unite(first_with[k], i);
      }
    }
  }
  std::vector<std::vector<Factorization>> out;
  std::vector<std::size_t> slot(z.size(), z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (slot[r] == z.size()) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(z[i]);
  }
  return out;
}

BettiReport betti_graph(const CanonicalValue& x, const MonoidSpec& spec, const Bounds& bounds) {
  const auto z = enumerate_factorizations(x, spec, bounds);
  BettiReport r;
  r.element = x;
  r.components = betti_components(z.factorizations);
  r.is_betti = r.components.size() >= 2;
  r.complete = z.complete;
  return r;
}

BettiReport betti_graph(const ElementExpr& x, const MonoidSpec& spec, const Bounds& bounds) {
  const auto z = enumerate_factorizations(x, spec, bounds);
  BettiReport r;
  r.element = canonicalize(x, spec);
  r.components = betti_components(z.factorizations);
  r.is_betti = r.components.size() >= 2;
  r.complete = z.complete;
  return r;
}

// ---- AP / AAP

std::optional<AapDecomposition> aap_decompose(const std::vector<std::uint64_t>& S_in, std::uint64_t d,
                                              std::uint64_t N) {
  if (S_in.empty() || d == 0) return std::nullopt;
  std::vector<std::int64_t> S(S_in.begin(), S_in.end());
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  const auto D = static_cast<std::int64_t>(d);
  const auto NN = static_cast<std::int64_t>(N);
  for (const auto s : S)
    if ((s - S[0]) % D != 0) return std::nullopt;

  std::optional<AapDecomposition> best;
  std::size_t best_extra = 0;
  for (std::size_t i = 0; i < S.size(); ++i) {
    const std::int64_t c = S[i];
    if (c - S.front() > NN) break;  // S' would reach below -N
    std::size_t j = i;
    while (j + 1 < S.size() && S[j + 1] == S[j] + D) ++j;
    const std::int64_t top = S[j] - c;
    if (S.back() - c > top + NN) continue;
    AapDecomposition a;
    a.c = c;
    a.d = d;
    a.N = N;
    for (std::size_t t = 0; t < S.size(); ++t) {
      const std::int64_t v = S[t] - c;
      if (t < i) {
        a.s_prime.push_back(v);
      } else if (t <= j) {
        a.s_star.push_back(v);
      } else {
        a.s_double.push_back(v);
      }
    }
    const std::size_t extra = a.s_prime.size() + a.s_double.size();
    if (!best || extra < best_extra) {
      best = std::move(a);
      best_extra = extra;
    }
  }
  return best;
}

namespace {

bool ap_test(const std::vector<std::uint64_t>& v, std::optional<std::uint64_t>& diff) {
  diff.reset();
  if (v.size() < 2) return true;
  const std::uint64_t g = v[1] - v[0];
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i] - v[i - 1] != g) return false;
  diff = g;
  return true;
}

}  // namespace

LengthSetReport ap_aap_analyze(const LengthSet& S, std::uint64_t d, std::uint64_t N) {
  LengthSetReport r;
  r.lengths = S;
  r.complete = true;
  const auto v = S.values();
  r.is_ap = ap_test(v, r.difference);
  r.aap = aap_decompose(v, d, N);
  return r;
}

LengthSetReport ap_aap_infer(const LengthSet& S, std::uint64_t max_N) {
  LengthSetReport r;
  r.lengths = S;
  r.complete = true;
  const auto v = S.values();
  r.is_ap = ap_test(v, r.difference);
  if (v.empty()) return r;
  std::uint64_t max_gap = 1;
  for (std::size_t i = 1; i < v.size(); ++i) max_gap = std::max(max_gap, v[i] - v[i - 1]);
  for (std::uint64_t N = 0; N <= max_N && !r.aap; ++N)
    for (std::uint64_t d = 1; d <= max_gap && !r.aap; ++d) r.aap = aap_decompose(v, d, N);
  return r;
}

}  // namespace mfactor
