// Copyright 2026 The Authors.
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

#ifndef CAPALG_ERRORS_HPP
#define CAPALG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace capalg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidResolution : public Error {
 public:
  using Error::Error;
};

class ChainMismatch : public Error {
 public:
  using Error::Error;
};

class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

// A structure or capacity that violates its invariants was passed where a
// valid one is required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// One failed law or invariant. `code` is a stable short tag (e.g.
// "axiom-3", "monotonicity"); `message` names the witness.
struct Diagnostic {
  std::string code;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
  friend auto operator<=>(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace capalg

#endif  // CAPALG_ERRORS_HPP
