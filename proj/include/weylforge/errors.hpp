// Copyright 2026 The Weylforge Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace weylforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract user input (non-unitary matrix, bad file, n = 0, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of a numerical routine does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Internal cross-check failed; indicates numerical breakdown rather than bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// C[phi] with phi in {0, pi/4} cannot serve as a two-application synthesis resource.
class UnsupportedPhi : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A parameter lies outside the validity range of a closed-form construction.
class RangeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Closed-form parameters are undefined for the requested target.
class DegenerateTarget : public Error {
 public:
  using Error::Error;
};

}  // namespace weylforge
