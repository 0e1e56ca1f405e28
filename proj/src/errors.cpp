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

#include "weylcalc/errors.hpp"

namespace weylcalc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedConfig: return "MalformedConfig";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::BadAutomorphism: return "BadAutomorphism";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::DatumMismatch: return "DatumMismatch";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::InfinitePi1: return "InfinitePi1";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::DecompositionNotFound: return "DecompositionNotFound";
    case ErrorKind::ExplorationBudgetExceeded: return "ExplorationBudgetExceeded";
    case ErrorKind::NonIntegralHalf: return "NonIntegralHalf";
    case ErrorKind::NonIntegralDimension: return "NonIntegralDimension";
    case ErrorKind::NegativeDimension: return "NegativeDimension";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::HypothesisViolated:
      return 2;
    case ErrorKind::ExplorationBudgetExceeded:
    case ErrorKind::GroupTooLarge:
      return 3;
    case ErrorKind::DecompositionFailure:
    case ErrorKind::DecompositionNotFound:
    case ErrorKind::NonIntegralDimension:
    case ErrorKind::ArithmeticOverflow:
    case ErrorKind::Internal:
      return 4;
    default:
      return 1;
  }
}

}  // namespace weylcalc
