// Copyright 2026 The weylcalc Authors. All Rights Reserved.
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

#ifndef WEYLCALC_ERRORS_HPP
#define WEYLCALC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace weylcalc {

enum class ErrorKind {
  MalformedConfig,
  NotFiniteType,
  BadAutomorphism,
  NotDominant,
  DatumMismatch,
  GroupTooLarge,
  InfinitePi1,
  DecompositionFailure,
  DecompositionNotFound,
  ExplorationBudgetExceeded,
  NonIntegralHalf,
  NonIntegralDimension,
  NegativeDimension,
  HypothesisViolated,
  Inconclusive,
  InvalidArgument,
  ArithmeticOverflow,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code used by the command-line front end for each error kind.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace weylcalc

#endif  // WEYLCALC_ERRORS_HPP
