// Copyright 2026 The cghz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cghz {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (unknown qubit, bad length,
/// non-unitary matrix, malformed label text, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// The register would exceed the configured qubit cap.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// The physical model does not hold for the supplied parameters, e.g. the
/// reflection is too lossy to be treated as a pure phase.
class ModelError : public Error {
  public:
    using Error::Error;
};

/// A post-selected outcome has zero probability.
class UnreachableOutcome : public Error {
  public:
    using Error::Error;
};

} // namespace cghz
