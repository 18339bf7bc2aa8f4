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

#ifndef MFACTOR_ERRORS_HPP
#define MFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfactor {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or rational literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated: zero divisor, reducible minimal polynomial, alpha <= 1 where a bound is needed, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A decision procedure ran past its configured limit without an answer.
class UndecidedError : public Error {
 public:
  using Error::Error;
};

/// The requested computation is not available for this monoid (non-atomic, unknown atoms, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace mfactor

#endif  // MFACTOR_ERRORS_HPP
