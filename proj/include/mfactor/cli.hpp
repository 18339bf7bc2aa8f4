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

// The monoid-factor command line.

#ifndef MFACTOR_CLI_HPP
#define MFACTOR_CLI_HPP

#include <iosfwd>

namespace mfactor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;     ///< a reproduce case failed, or an internal error
inline constexpr int kExitBadInput = 2;    ///< flag, expression or spec rejected
inline constexpr int kExitUndecided = 3;   ///< undecided, unsupported, or incomplete under --require-complete

/// Environment variable read for the default node budget.
inline constexpr const char* kBudgetEnv = "MONOID_FACTOR_BUDGET";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mfactor::cli

#endif  // MFACTOR_CLI_HPP
