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

// Golden cases replayed by `monoid-factor reproduce`.

#ifndef MFACTOR_REPRODUCE_HPP
#define MFACTOR_REPRODUCE_HPP

#include <string>
#include <vector>

#include "mfactor/report.hpp"

namespace mfactor {

struct CaseCheck {
  std::string what;
  bool passed = false;
};

struct CaseResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::vector<CaseCheck> checks;
  double seconds = 0;
  report::Json data;
};

struct CaseInfo {
  std::string id;
  std::string title;
};

std::vector<CaseInfo> reproduce_cases();
/// Throws DomainError for an unknown id.
CaseResult run_case(const std::string& id, unsigned workers = 0);

report::Json to_json(const CaseResult& r);

}  // namespace mfactor

#endif  // MFACTOR_REPRODUCE_HPP
