/*
   Copyright 2026 The polya-cert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "polya/certify.hpp"
#include "polya/matrix_form.hpp"

namespace polya {

// Input document:
//   {"n_vars": 2, "size": 1, "degree": 2,
//    "coeffs": [{"alpha": [2,0], "matrix": [[1]]},
//               {"alpha": [1,1], "matrix": [["-1"]]},
//               {"alpha": [0,2], "matrix": [[1]]}]}
// Matrix entries are JSON integers or exact rational strings "p/q"; floats
// are rejected. Zero-matrix coefficients may be omitted. Errors carry the
// offending field path. The result is validated.
MatrixForm parse_matrix_form(const std::string& text);
MatrixForm matrix_form_from_json(const nlohmann::json& document);

// Canonical serialization: coefficients in canonical monomial order, every
// rational as a canonical "p/q" string, zero matrices omitted.
// parse(serialize(B)) == B.
nlohmann::ordered_json serialize_matrix_form(const MatrixForm& b);

// Report documents (all keys in fixed order, rationals canonical):
//   certified:    {"outcome":"certified","m":3,"witnesses":6}
//                 plus "witness_minors" under include_witnesses
//   refuted:      {"outcome":"refuted","point":["1","0"],
//                  "direction":["0","1"],"value":"0"}
//   inconclusive: {"outcome":"inconclusive","m_max":50,"grid_depth":32}
// A margin diagnostic, when present, is emitted as "margin_approx".
nlohmann::ordered_json emit_report(const SearchReport& report, bool include_witnesses);

// Reads a certificate back from a certified report emitted with witnesses.
PolyaCertificate parse_certificate(const std::string& text);
PolyaCertificate certificate_from_json(const nlohmann::json& document);

// Fixed rendering used for every document we write: 2-space indent plus a
// trailing newline.
std::string render_json(const nlohmann::ordered_json& document);

struct JobConfig {
  enum class Mode { certify, refute_only, margin, pure_state_scan };
  Mode mode = Mode::certify;
  int m_max = 50;
  int grid_depth = 16;
  bool include_witnesses = false;
  std::optional<std::string> output_path;
};

}  // namespace polya
