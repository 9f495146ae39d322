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
#include "polya/certify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "polya/parallel.hpp"

namespace polya {

namespace {

// Work is issued in fixed-size chunks so that early exits (first failing
// coefficient, first bad grid point) pick the same item no matter how many
// threads executed the chunk.
constexpr std::size_t kChunk = 128;

std::vector<Rational> grid_point(const MultiIndex& beta, int depth) {
  std::vector<Rational> x;
  x.reserve(static_cast<std::size_t>(beta.size()));
  for (int i = 0; i < beta.size(); ++i) {
    Rational c(beta[i], depth);
    c.canonicalize();
    x.push_back(std::move(c));
  }
  return x;
}

struct GridScan {
  std::optional<Counterexample> counterexample;
  double min_eig = 0.0;  // over clean points; meaningful only when no counterexample
  bool saw_point = false;
};

// Evaluates B on the depth-grid of the simplex in canonical order. Stops at
// the first point whose value fails the exact PD test and turns it into an
// exact counterexample; otherwise folds the float eigenvalue minimum.
GridScan scan_grid(const MatrixForm& b, int depth) {
  if (depth < 1) throw std::invalid_argument("grid depth must be positive");
  const auto betas = exponents_of_degree(b.n_vars(), depth);

  GridScan scan;
  struct PointResult {
    bool pd = false;
    double min_eig = 0.0;
    std::optional<SymMatrixQ> value;  // kept only on failure
  };
  for (std::size_t base = 0; base < betas.size(); base += kChunk) {
    const std::size_t count = std::min(kChunk, betas.size() - base);
    std::vector<PointResult> results(count);
    parallel_for(count, [&](std::size_t i) {
      const auto x = grid_point(betas[base + i], depth);
      SymMatrixQ value = b.evaluate(x);
      PointResult& slot = results[i];
      slot.pd = is_pd_exact(value).is_pd;
      if (slot.pd) {
        slot.min_eig = min_eig_float(value);
      } else {
        slot.value = std::move(value);
      }
    });
    for (std::size_t i = 0; i < count; ++i) {
      if (!results[i].pd) {
        const auto x = grid_point(betas[base + i], depth);
        auto direction = refuting_direction(*results[i].value);
        Rational value = rayleigh(*results[i].value, direction);
        if (value > 0) {
          throw std::logic_error("refuting direction produced a positive value");
        }
        scan.counterexample = Counterexample{x, std::move(direction), std::move(value)};
        return scan;
      }
      scan.min_eig = scan.saw_point ? std::min(scan.min_eig, results[i].min_eig)
                                    : results[i].min_eig;
      scan.saw_point = true;
    }
  }
  return scan;
}

}  // namespace

StrictnessResult has_strict_pd_coefficients(const MatrixForm& b) {
  const auto alphas = exponents_of_degree(b.n_vars(), b.degree());
  StrictnessResult result;
  for (std::size_t base = 0; base < alphas.size(); base += kChunk) {
    const std::size_t count = std::min(kChunk, alphas.size() - base);
    std::vector<PdResult> tests(count);
    parallel_for(count, [&](std::size_t i) {
      tests[i] = is_pd_exact(b.coefficient(alphas[base + i]));
    });
    for (std::size_t i = 0; i < count; ++i) {
      if (!tests[i].is_pd) {
        result.strict = false;
        result.witnesses.clear();
        result.failing = alphas[base + i];
        return result;
      }
      result.witnesses.emplace(alphas[base + i], std::move(tests[i].minors));
    }
  }
  result.strict = true;
  return result;
}

SearchReport polya_exponent_search(const MatrixForm& b, const SearchOptions& options) {
  b.validate();
  if (options.m_max < 0) throw std::invalid_argument("m_max must be nonnegative");

  SearchReport report;
  report.m_max = options.m_max;
  report.grid_depth = options.grid_depth;

  {
    GridScan scan = scan_grid(b, options.grid_depth);
    if (scan.counterexample) {
      report.outcome = Outcome::refuted;
      report.counterexample = std::move(scan.counterexample);
      return report;
    }
  }

  MatrixForm current = b;
  for (int m = 0; m <= options.m_max; ++m) {
    report.m_tried = m;
    StrictnessResult strictness = has_strict_pd_coefficients(current);
    if (strictness.strict) {
      report.outcome = Outcome::certified;
      report.certificate =
          PolyaCertificate{m, b.degree() + m, std::move(strictness.witnesses)};
      break;
    }
    report.failing_per_m.emplace_back(m, *strictness.failing);
    if (m < options.m_max) current = sigma_mul(current);
  }

  if (report.outcome != Outcome::certified) {
    // Exhausted: retry the refutation grid at doubled depths within budget.
    int depth = options.grid_depth;
    unsigned long previous_points = monomial_count(b.n_vars(), depth);
    while (true) {
      const long next = 2L * depth;
      if (next > static_cast<long>(std::numeric_limits<int>::max())) break;
      unsigned long points = 0;
      try {
        points = monomial_count(b.n_vars(), static_cast<int>(next));
      } catch (const std::overflow_error&) {
        break;
      }
      // Deeper grids must actually add points (they do for n >= 2).
      if (points <= previous_points || points > options.grid_point_budget) break;
      previous_points = points;
      depth = static_cast<int>(next);
      report.grid_depth = depth;
      GridScan scan = scan_grid(b, depth);
      if (scan.counterexample) {
        report.outcome = Outcome::refuted;
        report.counterexample = std::move(scan.counterexample);
        return report;
      }
    }
    report.outcome = Outcome::inconclusive;
  }

  if (options.compute_margin) {
    // The pre-loop scan already proved the initial grid clean.
    report.margin = margin_estimate(b, options.grid_depth);
  }
  return report;
}

bool verify_certificate(const MatrixForm& b, const PolyaCertificate& certificate) {
  b.validate();
  if (certificate.m < 0) throw std::invalid_argument("certificate has negative exponent");
  if (certificate.degree != b.degree() + certificate.m) {
    throw std::invalid_argument("certificate degree mismatch: expected " +
                                std::to_string(b.degree() + certificate.m) + ", got " +
                                std::to_string(certificate.degree));
  }
  const auto betas = exponents_of_degree(b.n_vars(), certificate.degree);
  if (certificate.witnesses.size() != betas.size()) {
    throw std::invalid_argument("witness-count mismatch: expected " +
                                std::to_string(betas.size()) + ", got " +
                                std::to_string(certificate.witnesses.size()));
  }
  for (const auto& entry : certificate.witnesses) {
    const MultiIndex& beta = entry.first;
    if (beta.size() != b.n_vars() || beta.length() != certificate.degree) {
      throw std::invalid_argument("witness key " + beta.str() +
                                  " does not index a coefficient of the product");
    }
  }

  MatrixForm product = b;
  for (int step = 0; step < certificate.m; ++step) product = sigma_mul(product);

  bool valid = true;
  for (std::size_t base = 0; base < betas.size() && valid; base += kChunk) {
    const std::size_t count = std::min(kChunk, betas.size() - base);
    // vector<char>, not vector<bool>: slots must be independently writable.
    std::vector<char> ok(count, 0);
    parallel_for(count, [&](std::size_t i) {
      const MultiIndex& beta = betas[base + i];
      const PdResult recomputed = is_pd_exact(product.coefficient(beta));
      ok[i] = recomputed.is_pd && recomputed.minors == certificate.witnesses.at(beta);
    });
    for (std::size_t i = 0; i < count; ++i) valid = valid && ok[i];
  }
  return valid;
}

std::optional<Counterexample> counterexample_search(const MatrixForm& b, int depth) {
  b.validate();
  return scan_grid(b, depth).counterexample;
}

Rational margin_estimate(const MatrixForm& b, int depth) {
  b.validate();
  GridScan scan = scan_grid(b, depth);
  if (scan.counterexample) {
    throw std::invalid_argument("margin_estimate: a counterexample exists at depth " +
                                std::to_string(depth));
  }
  // 30 fractional bits keeps exactly-dyadic minima (vertex evaluations and
  // the like) unrounded while still rounding down irrational ones.
  return dyadic_floor(scan.min_eig, 30);
}

Rational pure_state_evaluate(const MatrixForm& b, std::span<const Rational> x,
                             std::span<const Rational> v) {
  b.validate();
  if (static_cast<int>(x.size()) != b.n_vars()) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) +
                                " coordinates, expected " + std::to_string(b.n_vars()));
  }
  Rational sum = 0;
  for (const Rational& c : x) {
    if (c < 0) throw std::invalid_argument("point is off the simplex: negative coordinate");
    sum += c;
  }
  if (sum != 1) throw std::invalid_argument("point is off the simplex: coordinates sum to " +
                                            rational_to_string(sum));
  if (static_cast<int>(v.size()) != b.size()) {
    throw std::invalid_argument("direction has " + std::to_string(v.size()) +
                                " entries, expected " + std::to_string(b.size()));
  }
  Rational norm = 0;
  for (const Rational& c : v) norm += c * c;
  if (norm == 0) throw std::invalid_argument("direction must be nonzero");

  return rayleigh(b.evaluate(x), v) / norm;
}

}  // namespace polya
