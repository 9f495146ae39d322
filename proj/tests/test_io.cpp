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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "oracles.hpp"
#include "polya/certify.hpp"
#include "polya/io.hpp"

using namespace polya;

namespace {

const char* kQuadricDoc = R"({
  "n_vars": 2, "size": 1, "degree": 2,
  "coeffs": [
    {"alpha": [2,0], "matrix": [[1]]},
    {"alpha": [1,1], "matrix": [["-1"]]},
    {"alpha": [0,2], "matrix": [[1]]}
  ]
})";

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

}  // namespace

TEST_CASE("parsing the quadric document") {
  const MatrixForm b = parse_matrix_form(kQuadricDoc);
  CHECK(b.n_vars() == 2);
  CHECK(b.size() == 1);
  CHECK(b.degree() == 2);
  CHECK(b.coefficient(mi({2, 0})).at(0, 0) == 1);
  CHECK(b.coefficient(mi({1, 1})).at(0, 0) == -1);
  CHECK(b.coefficient(mi({0, 2})).at(0, 0) == 1);
}

TEST_CASE("parse errors carry the field path") {
  const std::string asym = R"({"n_vars":2,"size":2,"degree":1,
    "coeffs":[{"alpha":[1,0],"matrix":[[1,2],[3,4]]}]})";
  CHECK_THROWS_WITH_AS(parse_matrix_form(asym), doctest::Contains("coeffs[0].matrix"),
                       std::invalid_argument);

  const std::string zero_den = R"({"n_vars":2,"size":1,"degree":1,
    "coeffs":[{"alpha":[1,0],"matrix":[["1/0"]]}]})";
  CHECK_THROWS_WITH_AS(parse_matrix_form(zero_den), doctest::Contains("zero denominator"),
                       std::invalid_argument);

  const std::string float_entry = R"({"n_vars":2,"size":1,"degree":1,
    "coeffs":[{"alpha":[1,0],"matrix":[[0.5]]}]})";
  CHECK_THROWS_AS(parse_matrix_form(float_entry), std::invalid_argument);

  const std::string bad_alpha = R"({"n_vars":2,"size":1,"degree":2,
    "coeffs":[{"alpha":[1,0],"matrix":[[1]]}]})";
  CHECK_THROWS_WITH_AS(parse_matrix_form(bad_alpha), doctest::Contains("coeffs[0].alpha"),
                       std::invalid_argument);

  const std::string duplicate = R"({"n_vars":2,"size":1,"degree":1,
    "coeffs":[{"alpha":[1,0],"matrix":[[1]]},{"alpha":[1,0],"matrix":[[2]]}]})";
  CHECK_THROWS_WITH_AS(parse_matrix_form(duplicate), doctest::Contains("duplicate"),
                       std::invalid_argument);

  CHECK_THROWS_AS(parse_matrix_form("not json"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_matrix_form(R"({"n_vars":2,"size":1,"coeffs":[]})"),
                       doctest::Contains("degree"), std::invalid_argument);
}

TEST_CASE("serialization is canonical and round-trips") {
  const MatrixForm b = parse_matrix_form(kQuadricDoc);
  const auto serialized = serialize_matrix_form(b);
  const MatrixForm reparsed = parse_matrix_form(serialized.dump());
  CHECK(reparsed == b);
  // Canonical fixpoint.
  CHECK(serialize_matrix_form(reparsed) == serialized);

  // Rationals canonicalize on the way in.
  const std::string redundant = R"({"n_vars":2,"size":1,"degree":1,
    "coeffs":[{"alpha":[1,0],"matrix":[["6/4"]]}]})";
  const auto canonical = serialize_matrix_form(parse_matrix_form(redundant));
  CHECK(canonical["coeffs"][0]["matrix"][0][0] == "3/2");

  // Zero matrices are dropped.
  const std::string with_zero = R"({"n_vars":2,"size":1,"degree":1,
    "coeffs":[{"alpha":[1,0],"matrix":[[1]]},{"alpha":[0,1],"matrix":[[0]]}]})";
  const auto trimmed = serialize_matrix_form(parse_matrix_form(with_zero));
  CHECK(trimmed["coeffs"].size() == 1);

  // Coefficients serialize in canonical order regardless of input order.
  std::mt19937 rng(24680);
  const MatrixForm random = oracle::random_matrix_form(rng, 3, 2, 2, -5, 5);
  const auto doc = serialize_matrix_form(random);
  CHECK(parse_matrix_form(doc.dump()) == random);
}

TEST_CASE("report emission shapes") {
  const MatrixForm b = parse_matrix_form(kQuadricDoc);
  const SearchReport certified = polya_exponent_search(b, {.m_max = 10});
  const auto doc = emit_report(certified, false);
  CHECK(doc["outcome"] == "certified");
  CHECK(doc["m"] == 3);
  CHECK(doc["witnesses"] == 6);
  CHECK(!doc.contains("witness_minors"));
  CHECK(render_json(doc).back() == '\n');

  const MatrixForm diag = parse_matrix_form(
      R"({"n_vars":2,"size":2,"degree":1,
          "coeffs":[{"alpha":[1,0],"matrix":[[1,0],[0,0]]},
                    {"alpha":[0,1],"matrix":[[0,0],[0,1]]}]})");
  const SearchReport refuted = polya_exponent_search(diag, {.m_max = 10});
  const auto refuted_doc = emit_report(refuted, false);
  CHECK(refuted_doc["outcome"] == "refuted");
  CHECK(refuted_doc["point"] == nlohmann::ordered_json::array({"1", "0"}));
  CHECK(refuted_doc["direction"] == nlohmann::ordered_json::array({"0", "1"}));
  CHECK(refuted_doc["value"] == "0");

  const SearchReport inconclusive = polya_exponent_search(b, {.m_max = 0, .grid_depth = 2});
  const auto inconclusive_doc = emit_report(inconclusive, false);
  CHECK(inconclusive_doc["outcome"] == "inconclusive");
  CHECK(inconclusive_doc["m_max"] == 0);
  CHECK(inconclusive_doc.contains("grid_depth"));
}

TEST_CASE("emitted certificates parse back and verify") {
  const MatrixForm b = parse_matrix_form(kQuadricDoc);
  const SearchReport report = polya_exponent_search(b, {.m_max = 10});
  REQUIRE(report.outcome == Outcome::certified);

  const std::string text = render_json(emit_report(report, true));
  const PolyaCertificate cert = parse_certificate(text);
  CHECK(cert.m == 3);
  CHECK(cert.degree == 5);
  CHECK(cert.witnesses.size() == 6);
  CHECK(verify_certificate(b, cert));

  // A certificate without minors cannot be reloaded.
  const std::string bare = render_json(emit_report(report, false));
  CHECK_THROWS_AS(parse_certificate(bare), std::invalid_argument);

  // A tampered minor fails verification after the round trip.
  auto doc = nlohmann::json::parse(text);
  doc["witness_minors"][0]["minors"][0] = "-1";
  CHECK(!verify_certificate(b, parse_certificate(doc.dump())));
}
