// Copyright 2026 The opent Authors
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

namespace opent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Shapes or dimensions that do not fit together.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A construction would exceed the configured size cap.
class SizeCapError : public Error {
   public:
    using Error::Error;
};

/// A value violates a documented precondition (unnormalized state, zero operator, ...).
class InvalidInputError : public Error {
   public:
    using Error::Error;
};

/// Two-term decomposition whose local factors are proportional on some side.
class DegenerateDecompositionError : public Error {
   public:
    using Error::Error;
};

/// Operator Schmidt rank too large for a rank-2 functional.
class RankError : public Error {
   public:
    using Error::Error;
};

/// Gate parameters out of their valid range.
class InvalidSpecError : public Error {
   public:
    using Error::Error;
};

/// Gate description that the requested operation does not support.
class UnsupportedSpecError : public Error {
   public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace opent
