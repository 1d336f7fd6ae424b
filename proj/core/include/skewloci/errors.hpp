/*
 * Copyright 2026 The skewloci authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace skewloci {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions of the arguments do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Pfaffian (or another even-size-only operation) applied to odd size.
class OddDimensionError : public Error {
 public:
  using Error::Error;
};

/// Exact polynomial division left a nonzero remainder.
class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

/// A subspace projection that would drop dimension (the subspace meets the
/// kernel nontrivially).
class DegenerateProjectionError : public Error {
 public:
  using Error::Error;
};

/// Inversion of a singular matrix.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON files, fraction strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewloci
