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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polya/matrix_form.hpp"
#include "polya/multi_index.hpp"
#include "polya/psd.hpp"
#include "polya/rational.hpp"

namespace polya {

// Exact witness that Sigma^m * B strictly has positive definite coefficients:
// one minor vector per coefficient of Sigma^m * B, covering every beta with
// |beta| = degree (count C(n + degree - 1, degree)), absent coefficients
// included.
struct PolyaCertificate {
  int m = 0;
  int degree = 0;  // degree of B plus m
  std::map<MultiIndex, std::vector<Rational>> witnesses;
};

// Exact refutation of pointwise positive definiteness on the simplex:
// a point of Delta_n and a direction with direction^T B(point) direction <= 0.
struct Counterexample {
  std::vector<Rational> point;
  std::vector<Rational> direction;
  Rational value;
};

enum class Outcome { certified, refuted, inconclusive };

struct SearchOptions {
  int m_max = 50;
  int grid_depth = 16;
  // Refutation grids double on exhaustion while the number of grid points
  // stays within this budget.
  std::size_t grid_point_budget = 200000;
  bool compute_margin = false;
};

struct SearchReport {
  Outcome outcome = Outcome::inconclusive;
  std::optional<PolyaCertificate> certificate;
  std::optional<Counterexample> counterexample;

  // Last exponent whose strictness was tested; -1 when the loop never ran
  // (refutation found before it started).
  int m_tried = -1;

  // For every failed m, the canonically-first coefficient that broke
  // strictness.
  std::vector<std::pair<int, MultiIndex>> failing_per_m;

  // Echo of the search parameters; grid_depth is the deepest grid explored.
  int m_max = 0;
  int grid_depth = 0;

  // Approximate grid minimum of the smallest eigenvalue, rounded down to a
  // dyadic rational. Diagnostic only; never gates certification.
  std::optional<Rational> margin;
};

struct StrictnessResult {
  bool strict = false;
  std::map<MultiIndex, std::vector<Rational>> witnesses;  // populated when strict
  std::optional<MultiIndex> failing;                      // canonically-first failure
};

// True iff every coefficient of B over all |alpha| = degree(B) (absent ones
// read as zero matrices) passes is_pd_exact.
StrictnessResult has_strict_pd_coefficients(const MatrixForm& b);

// Iterates m = 0, 1, ..., m_max over Sigma^m * B and certifies at the first
// strict m (the returned m is therefore minimal). A counterexample grid scan
// runs before the loop and again, at doubled depths within budget, on
// exhaustion; exhaustion without refutation is Inconclusive.
SearchReport polya_exponent_search(const MatrixForm& b, const SearchOptions& options = {});

// Recomputes Sigma^m * B from scratch, re-runs the exact PD test on every
// coefficient and cross-checks each stored minor vector. Structural mismatch
// (degree, witness count, unknown alpha) throws std::invalid_argument; a
// value mismatch returns false.
bool verify_certificate(const MatrixForm& b, const PolyaCertificate& certificate);

// Scans the barycentric grid {beta/depth : |beta| = depth} of Delta_n in
// canonical order, evaluating B exactly and testing positive definiteness at
// each point. Returns the first violation as an exact Counterexample, or
// nullopt when the grid is clean.
std::optional<Counterexample> counterexample_search(const MatrixForm& b, int depth);

// min over the depth-grid of min_eig_float(B(x)), rounded down to a dyadic
// rational. Heuristic proxy for the positivity margin on the grid only --
// NOT a certified bound over all of Delta_n. Throws std::invalid_argument if
// a counterexample exists at this depth.
Rational margin_estimate(const MatrixForm& b, int depth);

// Value of the pure state attached to (x, v) on B:
//   sum_alpha (v^T P_alpha v) x^alpha / (v^T v),
// which on the simplex equals rayleigh(B(x), v) / (v^T v). Throws when x is
// off the simplex or v is zero.
Rational pure_state_evaluate(const MatrixForm& b, std::span<const Rational> x,
                             std::span<const Rational> v);

}  // namespace polya
