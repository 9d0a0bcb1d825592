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

#pragma once

#include <stdexcept>
#include <string>

namespace mimo {

// Base for every error raised by the library. The CLI maps subclasses to
// exit codes: InvalidInput/ParseError -> 2, BudgetExceeded -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Non-positive eigenvalue where a positive definite form was required.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured subset budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mimo
