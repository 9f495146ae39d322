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
#include "polya/matrix_form.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "polya/psd.hpp"

namespace polya {

MatrixForm::MatrixForm(int n_vars, int size, int degree)
    : n_vars_(n_vars), size_(size), degree_(degree) {
  if (n_vars_ < 1) throw std::invalid_argument("n_vars must be positive");
  if (size_ < 1) throw std::invalid_argument("matrix size must be positive");
  if (degree_ < 0) throw std::invalid_argument("degree must be nonnegative");
}

MatrixForm::MatrixForm(int n_vars, int size, int degree, std::map<MultiIndex, SymMatrixQ> coeffs)
    : MatrixForm(n_vars, size, degree) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second.is_zero()) {
      it = coeffs.erase(it);
    } else {
      ++it;
    }
  }
  coeffs_ = std::move(coeffs);
}

MatrixForm MatrixForm::scalar_identity(const ScalarForm& f, int size) {
  std::map<MultiIndex, SymMatrixQ> coeffs;
  for (const auto& [alpha, c] : f.coefficients()) {
    coeffs.emplace(alpha, c * SymMatrixQ::identity(size));
  }
  return MatrixForm(f.n_vars(), size, f.degree(), std::move(coeffs));
}

MatrixForm MatrixForm::from_scalar(const ScalarForm& f) { return scalar_identity(f, 1); }

void MatrixForm::validate() const {
  for (const auto& [alpha, p] : coeffs_) {
    if (alpha.size() != n_vars_) {
      throw std::invalid_argument("coefficient " + alpha.str() + " has " +
                                  std::to_string(alpha.size()) + " variables, expected " +
                                  std::to_string(n_vars_));
    }
    if (alpha.length() != degree_) {
      throw std::invalid_argument("mixed degree: coefficient " + alpha.str() + " has length " +
                                  std::to_string(alpha.length()) + ", expected " +
                                  std::to_string(degree_));
    }
    if (p.size() != size_) {
      throw std::invalid_argument("coefficient " + alpha.str() + " is " +
                                  std::to_string(p.size()) + "x" + std::to_string(p.size()) +
                                  ", expected " + std::to_string(size_));
    }
    if (!p.is_symmetric()) {
      throw std::invalid_argument("asymmetric coefficient at " + alpha.str());
    }
  }
}

SymMatrixQ MatrixForm::coefficient(const MultiIndex& alpha) const {
  if (alpha.size() != n_vars_) {
    throw std::invalid_argument("coefficient query " + alpha.str() + " has " +
                                std::to_string(alpha.size()) + " variables, expected " +
                                std::to_string(n_vars_));
  }
  if (alpha.length() != degree_) {
    throw std::invalid_argument("coefficient query " + alpha.str() + " has length " +
                                std::to_string(alpha.length()) + ", form degree is " +
                                std::to_string(degree_));
  }
  const auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? SymMatrixQ(size_) : it->second;
}

SymMatrixQ MatrixForm::evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != n_vars_) {
    throw std::invalid_argument("evaluation point has " + std::to_string(x.size()) +
                                " coordinates, expected " + std::to_string(n_vars_));
  }
  std::vector<std::vector<Rational>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(degree_) + 1);
    powers[i][0] = 1;
    for (int k = 1; k <= degree_; ++k) {
      powers[i][static_cast<std::size_t>(k)] = powers[i][static_cast<std::size_t>(k) - 1] * x[i];
    }
  }
  SymMatrixQ sum(size_);
  for (const auto& [alpha, p] : coeffs_) {
    Rational monomial_value = 1;
    for (int i = 0; i < n_vars_; ++i) {
      monomial_value *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(alpha[i])];
    }
    sum += monomial_value * p;
  }
  return sum;
}

MatrixForm sigma_mul(const MatrixForm& b) {
  std::map<MultiIndex, SymMatrixQ> coeffs;
  for (const auto& [alpha, p] : b.coefficients()) {
    for (int i = 0; i < b.n_vars(); ++i) {
      auto [it, inserted] = coeffs.emplace(alpha.bumped(i), p);
      if (!inserted) it->second += p;
    }
  }
  return MatrixForm(b.n_vars(), b.size(), b.degree() + 1, std::move(coeffs));
}

WeightedNormalForm weighted_normal_form(const MatrixForm& b) {
  WeightedNormalForm nf{b.n_vars(), b.size(), b.degree(), {}};
  for (const MultiIndex& alpha : exponents_of_degree(b.n_vars(), b.degree())) {
    const Rational weight = multinomial(b.degree(), alpha);
    nf.coeffs.emplace(alpha, (1 / weight) * b.coefficient(alpha));
  }
  return nf;
}

MatrixForm reconstruct(const WeightedNormalForm& nf) {
  std::map<MultiIndex, SymMatrixQ> coeffs;
  for (const auto& [alpha, a] : nf.coeffs) {
    coeffs.emplace(alpha, multinomial(nf.degree, alpha) * a);
  }
  return MatrixForm(nf.n_vars, nf.size, nf.degree, std::move(coeffs));
}

long order_unit_shift(const WeightedNormalForm& nf) {
  // Float seed: N0 ~ ceil(max_alpha lambda_max(-A'_alpha)).
  double bound = 0.0;
  for (const auto& [alpha, a] : nf.coeffs) {
    bound = std::max(bound, -min_eig_float(a));
  }
  long n = std::max(0L, static_cast<long>(std::ceil(bound)));

  const auto shifted_all_psd = [&](long shift) {
    const SymMatrixQ shift_matrix = Rational(shift) * SymMatrixQ::identity(nf.size);
    for (const auto& [alpha, a] : nf.coeffs) {
      if (!is_psd_exact(shift_matrix + a)) return false;
    }
    return true;
  };

  if (shifted_all_psd(n)) {
    while (n > 0 && shifted_all_psd(n - 1)) --n;
  } else {
    do {
      ++n;
    } while (!shifted_all_psd(n));
  }
  return n;
}

}  // namespace polya
