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

#ifndef WEYLCALC_CLI_HPP
#define WEYLCALC_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylcalc/dims.hpp"

namespace weylcalc {

/// A preset name, or a path to a root-datum JSON file.
RootDatumPtr load_group(const std::string& spec);

struct TableSpec {
  enum class Format { Csv, Json };

  int max_length = 0;
  std::vector<StraightClass> classes;
  std::optional<KappaClass> kappa;  // restrict rows to one W_af-coset
  Format format = Format::Csv;
  int threads = 1;
};

/// (w, C) -> (nonempty, dim, d_w(C)) for every w of length <= max_length and
/// every listed class. Row order and formatting are deterministic.
std::string emit_table(const DimEngine& dims, const TableSpec& spec);

/// Brute-force cross-checks on a Cayley ball: formula length against Cayley
/// distance, and the Newton-point straightness test against powers.
nlohmann::json verify_oracle(const ClassEngine& e, int radius);
/// Reduction, u x decomposition, P-alcove and dimension checks on all
/// elements of length <= max_length.
nlohmann::json verify_theorems(const DimEngine& dims, int max_length);

/// Runs one command line (without the program name). Writes one JSON document
/// (or a table) to out and diagnostics to err; returns the exit code.
int run_query(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylcalc

#endif  // WEYLCALC_CLI_HPP
