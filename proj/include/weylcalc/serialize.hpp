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

#ifndef WEYLCALC_SERIALIZE_HPP
#define WEYLCALC_SERIALIZE_HPP

#include <json.hpp>

#include "weylcalc/affweyl.hpp"
#include "weylcalc/classes.hpp"

namespace weylcalc {

// JSON forms used by the CLI and the dimension cache. Simple reflections are
// written with 1-based labels; affine nodes with labels 0, -1, ...

nlohmann::json to_json(const Rational& r);  // integer when integral, else "p/q"
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RatVector& v);
RatVector rat_vector_from_json(const nlohmann::json& j);
IntVector int_vector_from_json(const nlohmann::json& j);

nlohmann::json finite_word_json(const FiniteWeylElt& u);
FiniteWeylElt finite_from_json(const RootDatum& d, const nlohmann::json& word);

/// {"lambda": [...], "word": [...]}
nlohmann::json to_json(const AffineWeylElt& w);
/// Accepts {"lambda", "word"} or {"affine_word": [labels]} (or both, multiplied
/// in that order).
AffineWeylElt element_from_json(const AffineWeylGroup& g, const nlohmann::json& j);

/// {"kappa": [...], "nu": [...], "length": n, "defect": n}
nlohmann::json to_json(const StraightClass& c);
/// Reads kappa and nu; kappa may be given as a coweight under "kappa_of".
/// Length and defect are recomputed from a straight representative and
/// checked against the input when present.
StraightClass class_from_json(const ClassEngine& e, const nlohmann::json& j);

}  // namespace weylcalc

#endif  // WEYLCALC_SERIALIZE_HPP
