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

// JSON forms of specs and results. Layout documented in docs/schema.md.

#ifndef MFACTOR_REPORT_HPP
#define MFACTOR_REPORT_HPP

#include <json.hpp>

#include "mfactor/invariants.hpp"
#include "mfactor/rootlift.hpp"

namespace mfactor::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json big(const BigInt& v);  ///< number when it fits in 64 bits, else decimal string
BigInt big_from(const Json& j);
Json poly(const IntPolynomial& f);  ///< coefficient array, constant term first
IntPolynomial poly_from(const Json& j);

Json to_json(const Flag& f);
Json to_json(const Classification& c);
Json to_json(const MonoidSpec& s);
/// Rebuilds the spec from route data and re-runs every check.
MonoidSpec spec_from_json(const Json& j);

Json to_json(const CanonicalValue& v);
CanonicalValue value_from_json(const Json& j);
Json to_json(const Factorization& z);  ///< [[exponent, count], ...]
Factorization factorization_from_json(const Json& j);
Json to_json(const LengthSet& s);
LengthSet length_set_from_json(const Json& j);
Json to_json(const BoundsUsed& b);

Json to_json(const std::vector<AtomVerdict>& atoms);
Json to_json(const FactorizationSetResult& r);
Json to_json(const LengthSetResult& r);
Json to_json(const AapDecomposition& a);
Json to_json(const LengthSetReport& r);
Json to_json(const CatenaryResult& r);
Json to_json(const BettiReport& r);
Json to_json(const ScannedElement& e);
Json to_json(const CatenaryScanResult& r);
Json to_json(const BettiScanResult& r);
Json to_json(const FurcusWitness& w);
Json to_json(const LiftedLengths& l);

}  // namespace mfactor::report

#endif  // MFACTOR_REPORT_HPP
