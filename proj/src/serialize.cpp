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

#include "weylcalc/serialize.hpp"

#include "weylcalc/errors.hpp"

namespace weylcalc {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidArgument, what); }

}  // namespace

json to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  bad("expected an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(to_json(r));
  return out;
}

RatVector rat_vector_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array, got " + j.dump());
  RatVector out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

IntVector int_vector_from_json(const json& j) {
  if (!j.is_array()) bad("expected an integer array, got " + j.dump());
  IntVector out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad("expected an integer, got " + e.dump());
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

json finite_word_json(const FiniteWeylElt& u) {
  json out = json::array();
  for (int s : u.reduced_word()) out.push_back(s + 1);
  return out;
}

FiniteWeylElt finite_from_json(const RootDatum& d, const json& word) {
  std::vector<int> w;
  for (std::int64_t s : int_vector_from_json(word)) {
    if (s < 1 || s > d.semisimple_rank()) bad("simple reflection label " + std::to_string(s) + " out of range");
    w.push_back(static_cast<int>(s - 1));
  }
  return FiniteWeylElt::from_word(d, w);
}

json to_json(const AffineWeylElt& w) { return {{"lambda", w.lambda()}, {"word", finite_word_json(w.finite_part())}}; }

AffineWeylElt element_from_json(const AffineWeylGroup& g, const json& j) {
  if (!j.is_object()) bad("an element must be a JSON object");
  const RootDatum& d = g.datum();
  AffineWeylElt w = AffineWeylElt::identity(d);
  bool any = false;
  if (j.contains("lambda") || j.contains("word")) {
    IntVector lambda = j.contains("lambda") ? int_vector_from_json(j["lambda"]) : IntVector(static_cast<std::size_t>(d.rank()), 0);
    if (static_cast<int>(lambda.size()) != d.rank()) bad("lambda must have " + std::to_string(d.rank()) + " entries");
    FiniteWeylElt u = j.contains("word") ? finite_from_json(d, j["word"]) : FiniteWeylElt::identity(d);
    w = AffineWeylElt(std::move(lambda), std::move(u));
    any = true;
  }
  if (j.contains("affine_word")) {
    std::vector<int> pos;
    for (std::int64_t l : int_vector_from_json(j["affine_word"])) pos.push_back(g.generator_position(static_cast<int>(l)));
    w = w * g.from_generator_word(pos);
    any = true;
  }
  if (!any) bad("an element needs \"lambda\"/\"word\" or \"affine_word\"");
  return w;
}

json to_json(const StraightClass& c) {
  return {{"kappa", c.kappa.components}, {"nu", to_json(c.nu_bar)}, {"length", c.length}, {"defect", c.defect}};
}

StraightClass class_from_json(const ClassEngine& e, const json& j) {
  if (!j.is_object()) bad("a class must be a JSON object");
  const RootDatum& d = e.datum();
  KappaClass k;
  if (j.contains("kappa_of")) {
    k = d.kappa_class(int_vector_from_json(j["kappa_of"]));
  } else if (j.contains("kappa")) {
    IntVector comps = int_vector_from_json(j["kappa"]);
    if (static_cast<int>(comps.size()) != d.rank()) bad("kappa must have " + std::to_string(d.rank()) + " entries");
    k = d.kappa_class(d.kappa_representative(KappaClass{comps}));  // reduce modulo the invariant factors
  } else {
    bad("a class needs \"kappa\" or \"kappa_of\"");
  }
  if (!j.contains("nu")) bad("a class needs \"nu\"");
  RatVector nu = d.dominant_rep(rat_vector_from_json(j["nu"]));
  StraightClass c = e.find_class(k, nu);
  if (j.contains("length") && j["length"] != c.length) bad("class length does not match its Newton point");
  if (j.contains("defect") && j["defect"] != c.defect) bad("class defect does not match");
  return c;
}

}  // namespace weylcalc
