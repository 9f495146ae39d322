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
#include "polya/psd.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace polya {

namespace {

void require_symmetric(const SymMatrixQ& a, const char* op) {
  if (!a.is_symmetric()) {
    throw std::invalid_argument(std::string(op) + ": input matrix is not symmetric");
  }
}

// Dense rational working copy.
std::vector<Rational> copy_entries(const SymMatrixQ& a) {
  const int r = a.size();
  std::vector<Rational> m(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      m[static_cast<std::size_t>(i * r + j)] = a.at(i, j);
    }
  }
  return m;
}

}  // namespace

PdResult is_pd_exact(const SymMatrixQ& a) {
  require_symmetric(a, "is_pd_exact");
  const int r = a.size();
  auto m = copy_entries(a);
  auto entry = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i * r + j)]; };

  PdResult result;
  result.minors.reserve(static_cast<std::size_t>(r));
  // One-step Bareiss: after k steps entry(k,k) is the (k+1)-th leading
  // principal minor, and the division by the previous pivot is exact.
  // We only proceed while every pivot so far is strictly positive, so no
  // division by zero can occur.
  Rational previous_pivot = 1;
  for (int k = 0; k < r; ++k) {
    const Rational minor = entry(k, k);
    result.minors.push_back(minor);
    if (minor <= 0) {
      result.is_pd = false;
      return result;
    }
    if (k == r - 1) break;
    for (int i = k + 1; i < r; ++i) {
      for (int j = k + 1; j < r; ++j) {
        entry(i, j) = (entry(i, j) * minor - entry(i, k) * entry(k, j)) / previous_pivot;
      }
    }
    previous_pivot = minor;
  }
  result.is_pd = true;
  return result;
}

bool is_psd_exact(const SymMatrixQ& a) {
  require_symmetric(a, "is_psd_exact");
  const int r = a.size();
  auto m = copy_entries(a);
  auto entry = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i * r + j)]; };

  std::vector<int> active;
  active.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) active.push_back(i);

  while (!active.empty()) {
    int pivot = -1;
    for (int i : active) {
      const Rational& d = entry(i, i);
      if (d < 0) return false;
      if (pivot < 0 && d > 0) pivot = i;
    }
    if (pivot < 0) {
      // Every remaining diagonal entry is zero; PSD forces the whole
      // remaining block to vanish.
      for (int i : active) {
        for (int j : active) {
          if (entry(i, j) != 0) return false;
        }
      }
      return true;
    }
    // Schur complement with respect to the positive pivot.
    const Rational d = entry(pivot, pivot);
    for (int i : active) {
      if (i == pivot || entry(i, pivot) == 0) continue;
      const Rational factor = entry(i, pivot) / d;
      for (int j : active) {
        if (j == pivot) continue;
        entry(i, j) -= factor * entry(pivot, j);
      }
    }
    std::erase(active, pivot);
  }
  return true;
}

double min_eig_float(const SymMatrixQ& a) {
  const int r = a.size();
  Eigen::MatrixXd m(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      m(i, j) = to_double(a.at(i, j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

Rational rayleigh(const SymMatrixQ& a, std::span<const Rational> v) {
  if (static_cast<int>(v.size()) != a.size()) {
    throw std::invalid_argument("rayleigh: vector has " + std::to_string(v.size()) +
                                " entries, matrix is " + std::to_string(a.size()) + "x" +
                                std::to_string(a.size()));
  }
  Rational sum = 0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      sum += v[static_cast<std::size_t>(i)] * a.at(i, j) * v[static_cast<std::size_t>(j)];
    }
  }
  return sum;
}

std::vector<Rational> refuting_direction(const SymMatrixQ& a) {
  const PdResult pd = is_pd_exact(a);
  if (pd.is_pd) {
    throw std::invalid_argument("refuting_direction: matrix is positive definite");
  }
  // k is the failing leading block: minors 1..k-1 are positive, minor k <= 0.
  const int k = pd.failing_index();

  // Exact LDL^T of the leading k x k block. The first k-1 pivots are
  // positive, so the factorization exists; the k-th pivot is
  // minor_k / minor_{k-1} <= 0 and is never divided by.
  std::vector<Rational> lower(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  std::vector<Rational> diag(static_cast<std::size_t>(k));
  auto l = [&](int i, int j) -> Rational& { return lower[static_cast<std::size_t>(i * k + j)]; };
  for (int j = 0; j < k; ++j) {
    Rational d = a.at(j, j);
    for (int s = 0; s < j; ++s) d -= l(j, s) * l(j, s) * diag[static_cast<std::size_t>(s)];
    diag[static_cast<std::size_t>(j)] = d;
    l(j, j) = 1;
    for (int i = j + 1; i < k; ++i) {
      // Only reached for j < k-1, where d > 0.
      Rational v = a.at(i, j);
      for (int s = 0; s < j; ++s) v -= l(i, s) * l(j, s) * diag[static_cast<std::size_t>(s)];
      l(i, j) = v / d;
    }
  }

  // Solve L^T w = e_k on the block; then w^T A w = d_k <= 0.
  std::vector<Rational> direction(static_cast<std::size_t>(a.size()), Rational(0));
  direction[static_cast<std::size_t>(k - 1)] = 1;
  for (int i = k - 2; i >= 0; --i) {
    Rational v = 0;
    for (int j = i + 1; j < k; ++j) v -= l(j, i) * direction[static_cast<std::size_t>(j)];
    direction[static_cast<std::size_t>(i)] = v;
  }
  return direction;
}

}  // namespace polya
