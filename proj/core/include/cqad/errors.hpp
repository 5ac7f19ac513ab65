// Copyright 2026 The cqad Authors
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

namespace cqad {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension or layout mismatch between objects that must agree.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A domain invariant does not hold. The message names the invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed device document. The message carries the position or JSON path.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Population found outside the two lowest qubit levels.
class LeakageError : public Error {
 public:
  LeakageError(const std::string& what, double leaked_population)
      : Error(what), leaked_population_(leaked_population) {}

  double leaked_population() const noexcept { return leaked_population_; }

 private:
  double leaked_population_;
};

// Singular (or numerically singular) matrix where an inverse is required.
class InversionError : public Error {
 public:
  using Error::Error;
};

// A quantity could not be extracted from numerical data (boundary minimum, no root).
class ExtractionError : public Error {
 public:
  using Error::Error;
};

// An operation has no meaningful result for the given input (e.g. spacings of one mode).
class EmptyResultError : public Error {
 public:
  using Error::Error;
};

}  // namespace cqad
