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
#include "polya/io.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace polya {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw std::invalid_argument(path + ": " + message);
}

int require_int(const json& j, const std::string& path, int min_value) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  if (j.is_number_unsigned() &&
      j.get<unsigned long long>() >
          static_cast<unsigned long long>(std::numeric_limits<int>::max())) {
    fail(path, "out of range");
  }
  const auto value = j.get<long long>();
  if (value < min_value) {
    fail(path, "must be >= " + std::to_string(min_value));
  }
  if (value > std::numeric_limits<int>::max()) fail(path, "out of range");
  return static_cast<int>(value);
}

Rational parse_rational_entry(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() &&
        j.get<unsigned long long>() >
            static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
      fail(path, "integer out of range; write it as a string");
    }
    Rational value(static_cast<long>(j.get<long long>()));
    return value;
  }
  if (j.is_string()) {
    try {
      return rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a rational string \"p/q\"");
}

const json& require_field(const json& j, const char* name, const std::string& path) {
  const auto it = j.find(name);
  if (it == j.end()) fail(path, std::string("missing field '") + name + "'");
  return *it;
}

MultiIndex parse_alpha(const json& j, int n_vars, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of exponents");
  if (static_cast<int>(j.size()) != n_vars) {
    fail(path, "has " + std::to_string(j.size()) + " entries, expected " +
                   std::to_string(n_vars));
  }
  std::vector<int> exponents;
  exponents.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    exponents.push_back(require_int(j[i], path + "[" + std::to_string(i) + "]", 0));
  }
  return MultiIndex(std::move(exponents));
}

}  // namespace

MatrixForm parse_matrix_form(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return matrix_form_from_json(document);
}

MatrixForm matrix_form_from_json(const json& document) {
  if (!document.is_object()) throw std::invalid_argument("document: expected an object");
  const int n_vars = require_int(require_field(document, "n_vars", "document"), "n_vars", 1);
  const int size = require_int(require_field(document, "size", "document"), "size", 1);
  const int degree = require_int(require_field(document, "degree", "document"), "degree", 0);
  const json& coeffs = require_field(document, "coeffs", "document");
  if (!coeffs.is_array()) fail("coeffs", "expected an array");

  std::map<MultiIndex, SymMatrixQ> parsed;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::string path = "coeffs[" + std::to_string(k) + "]";
    const json& item = coeffs[k];
    if (!item.is_object()) fail(path, "expected an object");

    MultiIndex alpha = parse_alpha(require_field(item, "alpha", path), n_vars, path + ".alpha");
    if (alpha.length() != degree) {
      fail(path + ".alpha", "length " + std::to_string(alpha.length()) +
                                " does not match degree " + std::to_string(degree));
    }

    const json& matrix = require_field(item, "matrix", path);
    if (!matrix.is_array() || static_cast<int>(matrix.size()) != size) {
      fail(path + ".matrix", "expected " + std::to_string(size) + " rows");
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      const json& row = matrix[i];
      const std::string row_path = path + ".matrix[" + std::to_string(i) + "]";
      if (!row.is_array() || static_cast<int>(row.size()) != size) {
        fail(row_path, "expected " + std::to_string(size) + " entries");
      }
      std::vector<Rational> entries;
      entries.reserve(row.size());
      for (std::size_t j = 0; j < row.size(); ++j) {
        entries.push_back(
            parse_rational_entry(row[j], row_path + "[" + std::to_string(j) + "]"));
      }
      rows.push_back(std::move(entries));
    }
    SymMatrixQ value = SymMatrixQ::from_rows(rows);
    if (!value.is_symmetric()) fail(path + ".matrix", "asymmetric");
    if (!parsed.emplace(std::move(alpha), std::move(value)).second) {
      fail(path + ".alpha", "duplicate coefficient");
    }
  }

  MatrixForm result(n_vars, size, degree, std::move(parsed));
  result.validate();
  return result;
}

ordered_json serialize_matrix_form(const MatrixForm& b) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& [alpha, p] : b.coefficients()) {
    ordered_json matrix = ordered_json::array();
    for (int i = 0; i < b.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < b.size(); ++j) {
        row.push_back(rational_to_string(p.at(i, j)));
      }
      matrix.push_back(std::move(row));
    }
    coeffs.push_back(ordered_json{{"alpha", alpha.exponents()}, {"matrix", std::move(matrix)}});
  }
  return ordered_json{
      {"n_vars", b.n_vars()}, {"size", b.size()}, {"degree", b.degree()},
      {"coeffs", std::move(coeffs)}};
}

ordered_json emit_report(const SearchReport& report, bool include_witnesses) {
  ordered_json out;
  switch (report.outcome) {
    case Outcome::certified: {
      const PolyaCertificate& cert = *report.certificate;
      out["outcome"] = "certified";
      out["m"] = cert.m;
      out["witnesses"] = cert.witnesses.size();
      if (include_witnesses) {
        ordered_json witness_minors = ordered_json::array();
        for (const auto& [beta, minors] : cert.witnesses) {
          ordered_json minor_strings = ordered_json::array();
          for (const Rational& minor : minors) {
            minor_strings.push_back(rational_to_string(minor));
          }
          witness_minors.push_back(
              ordered_json{{"alpha", beta.exponents()}, {"minors", std::move(minor_strings)}});
        }
        out["witness_minors"] = std::move(witness_minors);
      }
      break;
    }
    case Outcome::refuted: {
      const Counterexample& ce = *report.counterexample;
      out["outcome"] = "refuted";
      ordered_json point = ordered_json::array();
      for (const Rational& c : ce.point) point.push_back(rational_to_string(c));
      ordered_json direction = ordered_json::array();
      for (const Rational& c : ce.direction) direction.push_back(rational_to_string(c));
      out["point"] = std::move(point);
      out["direction"] = std::move(direction);
      out["value"] = rational_to_string(ce.value);
      break;
    }
    case Outcome::inconclusive: {
      out["outcome"] = "inconclusive";
      out["m_max"] = report.m_max;
      out["grid_depth"] = report.grid_depth;
      break;
    }
  }
  if (report.margin) out["margin_approx"] = rational_to_string(*report.margin);
  return out;
}

PolyaCertificate parse_certificate(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return certificate_from_json(document);
}

PolyaCertificate certificate_from_json(const json& document) {
  if (!document.is_object()) throw std::invalid_argument("certificate: expected an object");
  const json& outcome = require_field(document, "outcome", "certificate");
  if (!outcome.is_string() || outcome.get<std::string>() != "certified") {
    throw std::invalid_argument("certificate: outcome is not 'certified'");
  }
  PolyaCertificate cert;
  cert.m = require_int(require_field(document, "m", "certificate"), "m", 0);

  const json& witness_minors = require_field(document, "witness_minors", "certificate");
  if (!witness_minors.is_array() || witness_minors.empty()) {
    throw std::invalid_argument(
        "certificate: witness_minors missing (emit the report with witnesses enabled)");
  }
  for (std::size_t k = 0; k < witness_minors.size(); ++k) {
    const std::string path = "witness_minors[" + std::to_string(k) + "]";
    const json& item = witness_minors[k];
    if (!item.is_object()) fail(path, "expected an object");
    const json& alpha_json = require_field(item, "alpha", path);
    if (!alpha_json.is_array() || alpha_json.empty()) fail(path + ".alpha", "expected an array");
    std::vector<int> exponents;
    for (std::size_t i = 0; i < alpha_json.size(); ++i) {
      exponents.push_back(
          require_int(alpha_json[i], path + ".alpha[" + std::to_string(i) + "]", 0));
    }
    MultiIndex beta{std::move(exponents)};

    const json& minors_json = require_field(item, "minors", path);
    if (!minors_json.is_array()) fail(path + ".minors", "expected an array");
    std::vector<Rational> minors;
    minors.reserve(minors_json.size());
    for (std::size_t i = 0; i < minors_json.size(); ++i) {
      minors.push_back(
          parse_rational_entry(minors_json[i], path + ".minors[" + std::to_string(i) + "]"));
    }
    if (!cert.witnesses.emplace(std::move(beta), std::move(minors)).second) {
      fail(path + ".alpha", "duplicate witness");
    }
  }
  cert.degree = cert.witnesses.begin()->first.length();

  const json& count = require_field(document, "witnesses", "certificate");
  if (!count.is_number_integer() ||
      count.get<long long>() != static_cast<long long>(cert.witnesses.size())) {
    throw std::invalid_argument("certificate: witness count does not match witness_minors");
  }
  return cert;
}

std::string render_json(const ordered_json& document) { return document.dump(2) + "\n"; }

}  // namespace polya
