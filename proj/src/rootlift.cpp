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

#include "mfactor/rootlift.hpp"

namespace mfactor {

std::uint64_t LiftedFactorization::length() const {
  std::uint64_t n = 0;
  for (const auto& c : components) n += c.length();
  return n;
}

LiftedFactorization split_factorization(const Factorization& z, unsigned n) {
  if (n == 0) throw DomainError("root order must be positive");
  std::vector<std::vector<std::uint64_t>> parts(n);
  const auto& c = z.counts();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    auto& p = parts[k % n];
    const std::size_t e = k / n;
    if (p.size() <= e) p.resize(e + 1, 0);
    p[e] = c[k];
  }
  LiftedFactorization out;
  for (auto& p : parts) out.components.emplace_back(std::move(p));
  return out;
}

Factorization join_factorization(const LiftedFactorization& z) {
  const std::size_t n = z.components.size();
  std::vector<std::uint64_t> c;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& p = z.components[r].counts();
    for (std::size_t e = 0; e < p.size(); ++e) {
      if (p[e] == 0) continue;
      const std::size_t k = e * n + r;
      if (c.size() <= k) c.resize(k + 1, 0);
      c[k] = p[e];
    }
  }
  return Factorization(std::move(c));
}

MonoidSpec base_spec(const MonoidSpec& spec) {
  if (spec.route != Route::IrreducibleRoot) throw UnsupportedError("root lift needs an irreducible root spec");
  return make_rational_spec(spec.q);
}

LiftedLengths lifted_length_set(const CanonicalValue& b, const MonoidSpec& spec, const Bounds& bounds) {
  const MonoidSpec base = base_spec(spec);
  LiftedLengths out;
  out.lengths = LengthSet::single(0);
  out.complete = true;
  for (const auto& t : b.coords) {
    if (t < 0) throw DomainError("coordinate " + to_string(t) + " is outside N0[" + to_string(spec.q) + "]");
    LengthSetResult L;
    if (t == 0) {
      L.lengths = LengthSet::single(0);
      L.complete = true;
    } else {
      L = length_set(CanonicalValue{{t}}, base, bounds);
    }
    if (L.lengths.empty()) {
      if (L.complete)
        throw DomainError("coordinate " + to_string(t) + " is outside N0[" + to_string(spec.q) + "]");
      out.complete = false;
    }
    out.complete = out.complete && L.complete;
    out.lengths = LengthSet::sumset(out.lengths, L.lengths);
    out.components.push_back(L.lengths);
  }
  return out;
}

LiftedLengths lifted_length_set(const ElementExpr& b, const MonoidSpec& spec, const Bounds& bounds) {
  return lifted_length_set(canonicalize(b, spec), spec, bounds);
}

std::vector<LiftedBettiElement> lifted_betti(const MonoidSpec& spec, unsigned max_m, const Bounds& bounds) {
  base_spec(spec);
  std::vector<LiftedBettiElement> out;
  const auto family = betti_family(spec, max_m);
  const unsigned n = spec.n;
  for (std::size_t i = 0; i < family.size(); ++i) {
    LiftedBettiElement e;
    e.m = static_cast<unsigned>(i / n);
    e.r = static_cast<unsigned>(i % n);
    e.value = family[i];
    e.direct = betti_graph(e.value, spec, bounds);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace mfactor
