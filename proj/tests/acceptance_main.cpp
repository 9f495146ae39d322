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

// Acceptance suite: one self-contained check per shipped guarantee, each
// printed as a single pass/fail line with its runtime. Usage:
//   acceptance [path-to-polya-cert-binary]
// The binary path is needed only for the CLI determinism check.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polya/certify.hpp"
#include "polya/io.hpp"

using namespace polya;

namespace {

std::string g_cli_bin;

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

ScalarForm quadric2() {
  return ScalarForm(2, 2,
                    {{mi({2, 0}), Rational(1)}, {mi({1, 1}), Rational(-1)},
                     {mi({0, 2}), Rational(1)}});
}

[[noreturn]] void fail(const std::string& message) { throw std::runtime_error(message); }

void require(bool condition, const std::string& message) {
  if (!condition) fail(message);
}

// ---------------------------------------------------------------------------
// 1. Scalar Polya exponent with brute-force cross-check.

void criterion_scalar_exponent() {
  const SearchReport report =
      polya_exponent_search(MatrixForm::from_scalar(quadric2()), {.m_max = 10});
  require(report.outcome == Outcome::certified, "search did not certify");
  require(report.certificate->m == 3, "expected m = 3, got m = " +
                                          std::to_string(report.certificate->m));

  const oracle::Poly dense = oracle::to_dense(quadric2());
  require(oracle::naive_sigma_power(dense, 2, 0).at({1, 1}) == -1,
          "m=0 oracle: expected -1 at xy");
  require(oracle::naive_sigma_power(dense, 2, 1).at({2, 1}) == 0,
          "m=1 oracle: expected 0 at x^2 y");
  require(oracle::naive_sigma_power(dense, 2, 2).at({2, 2}) == 0,
          "m=2 oracle: expected 0 at x^2 y^2");
  for (int m = 0; m <= 2; ++m) {
    const oracle::Poly expansion = oracle::naive_sigma_power(dense, 2, m);
    bool all_positive = true;
    for (const auto& alpha : exponents_of_degree(2, 2 + m)) {
      const auto it = expansion.find(alpha.exponents());
      all_positive = all_positive && it != expansion.end() && it->second > 0;
    }
    require(!all_positive, "oracle says m = " + std::to_string(m) + " already works");
  }
}

// ---------------------------------------------------------------------------
// 2. Matrix Polya exponent.

void criterion_matrix_exponent() {
  const MatrixForm b = MatrixForm::scalar_identity(quadric2(), 2);
  const SearchReport report = polya_exponent_search(b, {.m_max = 10});
  require(report.outcome == Outcome::certified, "search did not certify");
  require(report.certificate->m == 3, "expected m = 3");
  require(report.certificate->witnesses.size() == 6, "expected C(6,5) = 6 witnesses");

  MatrixForm product = b;
  for (int step = 0; step < 3; ++step) product = sigma_mul(product);
  for (const auto& beta : exponents_of_degree(2, 5)) {
    require(is_pd_exact(product.coefficient(beta)).is_pd,
            "coefficient " + beta.str() + " of Sigma^3 B is not PD");
  }
}

// ---------------------------------------------------------------------------
// 3. Refutation at a vertex.

void criterion_refutation() {
  const MatrixForm diag(2, 2, 1,
                        {{mi({1, 0}), SymMatrixQ::from_rows({{1, 0}, {0, 0}})},
                         {mi({0, 1}), SymMatrixQ::from_rows({{0, 0}, {0, 1}})}});
  const auto ce = counterexample_search(diag, 1);
  require(ce.has_value(), "no counterexample at depth 1");
  require(ce->value <= 0, "counterexample value is positive");
  int vertex_coordinates = 0;
  for (const auto& c : ce->point) {
    require(c == 0 || c == 1, "counterexample is not at a vertex");
    if (c == 1) ++vertex_coordinates;
  }
  require(vertex_coordinates == 1, "counterexample is not at a vertex");
  require(rayleigh(diag.evaluate(ce->point), ce->direction) == ce->value,
          "stored value does not match an independent Rayleigh evaluation");
}

// ---------------------------------------------------------------------------
// 4. Certified forms are pointwise PD on the simplex (soundness).

MatrixForm random_candidate(std::mt19937& rng, int n, int r, int d) {
  // Entries stay in [-3,3]; the diagonal is biased positive so that a useful
  // share of candidates certifies.
  std::map<MultiIndex, SymMatrixQ> coeffs;
  for (const auto& alpha : exponents_of_degree(n, d)) {
    SymMatrixQ p(r);
    for (int i = 0; i < r; ++i) {
      for (int j = i; j < r; ++j) {
        p.set(i, j, i == j ? oracle::random_rational(rng, 1, 3, 2)
                           : oracle::random_rational(rng, -1, 1, 3));
      }
    }
    coeffs.emplace(alpha, std::move(p));
  }
  return MatrixForm(n, r, d, std::move(coeffs));
}

void criterion_soundness() {
  std::mt19937 rng(20260814);
  int certified = 0;
  int attempts = 0;
  while (certified < 50) {
    if (++attempts > 500) fail("could not collect 50 certified forms in 500 attempts");
    const int n = 2 + static_cast<int>(rng() % 2);
    const int r = 1 + static_cast<int>(rng() % 3);
    const int d = 1 + static_cast<int>(rng() % 2);
    const MatrixForm b = random_candidate(rng, n, r, d);
    const SearchReport report = polya_exponent_search(b, {.m_max = 20, .grid_depth = 8});
    if (report.outcome != Outcome::certified) continue;
    ++certified;
    for (int k = 0; k < 1000; ++k) {
      const auto x = oracle::random_simplex_point(rng, n);
      if (!is_pd_exact(b.evaluate(x)).is_pd) {
        fail("certified form is not PD at a random simplex point (violation)");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Sigma multiplication preserves strictness.

void criterion_sigma_preservation() {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % 3);
    const int d = static_cast<int>(rng() % 3);
    const MatrixForm b = oracle::random_strict_matrix_form(rng, n, r, d);
    require(has_strict_pd_coefficients(b).strict, "generator produced a non-strict form");
    if (!has_strict_pd_coefficients(sigma_mul(b)).strict) {
      fail("strictness lost after sigma multiplication (violation)");
    }
  }
}

// ---------------------------------------------------------------------------
// 6. Exact PD test agrees with the float eigensolver outside the band.

void criterion_kernel_agreement() {
  std::mt19937 rng(20260816);
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 5);
    const SymMatrixQ a = oracle::random_symmetric(rng, r, -10, 10, 3);
    const bool pd = is_pd_exact(a).is_pd;
    const double min_eig = min_eig_float(a);
    if (min_eig > 1e-6 && !pd) fail("float says PD, exact test disagrees outside the band");
    if (min_eig < -1e-6 && pd) fail("float says not PD, exact test disagrees outside the band");
  }
}

// ---------------------------------------------------------------------------
// 7. Order-unit shift: PSD at N, not PSD at N-1.

void criterion_order_unit() {
  std::mt19937 rng(20260817);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % 3);
    const int d = static_cast<int>(rng() % 3);
    const WeightedNormalForm nf =
        weighted_normal_form(oracle::random_matrix_form(rng, n, r, d, -9, 9));
    const long shift = order_unit_shift(nf);
    const SymMatrixQ at_n = Rational(shift) * SymMatrixQ::identity(r);
    bool tight = shift == 0;
    for (const auto& [alpha, a] : nf.coeffs) {
      if (!is_psd_exact(at_n + a)) fail("N*I + A' is not PSD at the returned N");
      if (shift >= 1) {
        const SymMatrixQ at_prev = Rational(shift - 1) * SymMatrixQ::identity(r);
        if (!is_psd_exact(at_prev + a)) tight = true;
      }
    }
    if (!tight) fail("N-1 also works for every coefficient: returned N is not minimal");
  }
}

// ---------------------------------------------------------------------------
// 8. Pure states factor through the Rayleigh quotient, exactly.

void criterion_pure_state() {
  std::mt19937 rng(20260818);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % 3);
    const int d = static_cast<int>(rng() % 4);
    const MatrixForm b = oracle::random_matrix_form(rng, n, r, d, -5, 5);
    const auto x = oracle::random_simplex_point(rng, n);
    const auto v = oracle::random_nonzero_vector(rng, r, -4, 4);
    Rational norm = 0;
    for (const auto& c : v) norm += c * c;
    if (pure_state_evaluate(b, x, v) * norm != rayleigh(b.evaluate(x), v)) {
      fail("pure-state value and Rayleigh quotient differ");
    }
  }
}

// ---------------------------------------------------------------------------
// 9. Scaling: an n=3, r=3, d=3 input certifying at double-digit m, verified.

MatrixForm scaling_input() {
  // (x^2 + (lambda-2)xy + y^2 + z^2) * Sigma with lambda = 1/3, positive on
  // the simplex with margin lambda/4, times I_3, with an xyz coupling on the
  // off-diagonal that keeps the matrix irreducible.
  const Rational lambda(1, 3);
  ScalarForm quadric3(3, 2,
                      {{mi({2, 0, 0}), Rational(1)},
                       {mi({1, 1, 0}), lambda - 2},
                       {mi({0, 2, 0}), Rational(1)},
                       {mi({0, 0, 2}), Rational(1)}});
  const ScalarForm f = quadric3 * ScalarForm::sigma(3);

  std::map<MultiIndex, SymMatrixQ> coeffs;
  for (const auto& [alpha, c] : f.coefficients()) {
    coeffs.emplace(alpha, c * SymMatrixQ::identity(3));
  }
  SymMatrixQ& xyz = coeffs.at(mi({1, 1, 1}));
  const Rational coupling(1, 8);
  xyz.set(0, 1, xyz.at(0, 1) + coupling);
  xyz.set(0, 2, xyz.at(0, 2) + coupling);
  xyz.set(1, 2, xyz.at(1, 2) + coupling);
  return MatrixForm(3, 3, 3, std::move(coeffs));
}

void criterion_scaling() {
  const MatrixForm b = scaling_input();
  const SearchReport report = polya_exponent_search(b, {.m_max = 15});
  require(report.outcome == Outcome::certified, "scaling input did not certify by m = 15");
  require(report.certificate->m >= 8,
          "scaling input certified too early (m = " +
              std::to_string(report.certificate->m) + "); not a scaling exercise");
  require(verify_certificate(b, *report.certificate), "certificate failed verification");
}

// ---------------------------------------------------------------------------
// 10. CLI determinism across thread counts.

std::string run_cli_capture(const std::string& env, const std::string& args) {
  const auto dir = std::filesystem::temp_directory_path() / "polya-acceptance";
  std::filesystem::create_directories(dir);
  const auto out = dir / "out.json";
  const std::string command =
      env + " '" + g_cli_bin + "' " + args + " > '" + out.string() + "' 2>/dev/null";
  const int raw = std::system(command.c_str());
  if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) fail("CLI run failed: " + command);
  std::ifstream in(out);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void criterion_cli_determinism() {
  if (g_cli_bin.empty()) fail("CLI binary path not supplied (argv[1])");
  const auto dir = std::filesystem::temp_directory_path() / "polya-acceptance";
  std::filesystem::create_directories(dir);
  const auto input = dir / "quadric.json";
  {
    std::ofstream out(input);
    out << render_json(serialize_matrix_form(MatrixForm::from_scalar(quadric2())));
  }
  const std::string args = "certify '" + input.string() + "' --witnesses";
  const std::string first = run_cli_capture("POLYA_CERT_THREADS=1", args);
  const std::string second = run_cli_capture("POLYA_CERT_THREADS=8", args);
  require(!first.empty(), "CLI produced no output");
  require(first == second, "reports differ between POLYA_CERT_THREADS=1 and =8");
  const std::string again = run_cli_capture("POLYA_CERT_THREADS=1", args);
  require(first == again, "reports differ between identical runs");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_bin = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "scalar Polya exponent m=3 with brute-force cross-check", 1.0,
       criterion_scalar_exponent},
      {2, "matrix Polya exponent m=3 with 6 PD coefficients", 1.0, criterion_matrix_exponent},
      {3, "exact vertex refutation of diag(x,y) at depth 1", 1.0, criterion_refutation},
      {4, "50 certified random forms PD at 1000 simplex points each", 120.0,
       criterion_soundness},
      {5, "sigma multiplication preserves strictness on 100 random forms", 30.0,
       criterion_sigma_preservation},
      {6, "exact PD agrees with float eigenvalues outside 1e-6 band", 30.0,
       criterion_kernel_agreement},
      {7, "order-unit shift minimal on 100 weighted normal forms", 30.0, criterion_order_unit},
      {8, "pure-state/Rayleigh exact equivalence on 200 samples", 10.0, criterion_pure_state},
      {9, "n=3 r=3 d=3 search and verification inside 60 s", 60.0, criterion_scaling},
      {10, "byte-identical CLI reports across thread counts", 60.0, criterion_cli_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > criterion.budget_seconds) {
      error = "exceeded " + std::to_string(criterion.budget_seconds) + " s budget";
    }
    if (error.empty()) {
      std::printf("[PASS] criterion %2d: %s (%.2f s)\n", criterion.id, criterion.name, elapsed);
    } else {
      std::printf("[FAIL] criterion %2d: %s (%.2f s) -- %s\n", criterion.id, criterion.name,
                  elapsed, error.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
