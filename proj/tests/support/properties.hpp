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

// Randomized property suites shared by the unit tests and the acceptance run.

#ifndef MFACTOR_TESTS_PROPERTIES_HPP
#define MFACTOR_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mfactor::testing {

struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;  ///< first few only
  std::size_t failed = 0;

  bool ok() const { return failed == 0 && cases > 0; }
  void fail(std::string what) {
    ++failed;
    if (failures.size() < 8) failures.push_back(std::move(what));
  }
};

inline constexpr std::uint64_t kPropertySeed = 0x6d66616374ULL;

/// Symmetry, identity and triangle inequality of distance on full Z(x).
PropertyReport metric_axioms(std::size_t max_triples = 200, std::uint64_t seed = kPropertySeed);
/// Commutativity, associativity, idempotence, divisibility of fact_gcd.
PropertyReport gcd_laws(std::size_t trials = 500, std::uint64_t seed = kPropertySeed);
/// Search engine against the polynomial-division oracle; also lengths.
PropertyReport dfs_vs_oracle(std::size_t instances = 100, std::uint64_t seed = kPropertySeed);
/// Prim bottleneck against threshold connectivity; Betti components too.
PropertyReport mst_vs_threshold(std::size_t instances = 50, std::uint64_t seed = kPropertySeed);
/// Elements of rational N0[q] with two or more factorizations have every
/// length >= min(n, d).
PropertyReport min_length_bound();

}  // namespace mfactor::testing

#endif  // MFACTOR_TESTS_PROPERTIES_HPP
