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
#include "polya/scalar_form.hpp"

#include <stdexcept>
#include <utility>

namespace polya {

namespace {

void check_compatible(const ScalarForm& f, const ScalarForm& g) {
  if (f.n_vars() != g.n_vars()) {
    throw std::invalid_argument("variable-count mismatch: " + std::to_string(f.n_vars()) +
                                " vs " + std::to_string(g.n_vars()));
  }
}

// Power table x_i^k for k = 0..max_power; keeps evaluation at one point to
// O(terms * n) multiplications.
std::vector<std::vector<Rational>> power_table(std::span<const Rational> x, int max_power) {
  std::vector<std::vector<Rational>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(max_power) + 1);
    powers[i][0] = 1;
    for (int k = 1; k <= max_power; ++k) {
      powers[i][static_cast<std::size_t>(k)] = powers[i][static_cast<std::size_t>(k) - 1] * x[i];
    }
  }
  return powers;
}

}  // namespace

ScalarForm::ScalarForm(int n_vars, int degree) : n_vars_(n_vars), degree_(degree) {
  if (n_vars_ < 1) throw std::invalid_argument("n_vars must be positive");
  if (degree_ < 0) throw std::invalid_argument("degree must be nonnegative");
}

ScalarForm::ScalarForm(int n_vars, int degree, std::map<MultiIndex, Rational> coeffs)
    : ScalarForm(n_vars, degree) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    const MultiIndex& alpha = it->first;
    if (alpha.size() != n_vars_) {
      throw std::invalid_argument("coefficient key " + alpha.str() + " has " +
                                  std::to_string(alpha.size()) + " variables, expected " +
                                  std::to_string(n_vars_));
    }
    if (alpha.length() != degree_) {
      throw std::invalid_argument("coefficient key " + alpha.str() + " has length " +
                                  std::to_string(alpha.length()) + ", expected degree " +
                                  std::to_string(degree_));
    }
    if (it->second == 0) {
      it = coeffs.erase(it);
    } else {
      ++it;
    }
  }
  coeffs_ = std::move(coeffs);
}

ScalarForm ScalarForm::sigma(int n_vars) {
  std::map<MultiIndex, Rational> coeffs;
  for (int i = 0; i < n_vars; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n_vars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    coeffs.emplace(MultiIndex(std::move(e)), Rational(1));
  }
  return ScalarForm(n_vars, 1, std::move(coeffs));
}

ScalarForm ScalarForm::constant(int n_vars, Rational value) {
  std::map<MultiIndex, Rational> coeffs;
  if (value != 0) {
    coeffs.emplace(MultiIndex(std::vector<int>(static_cast<std::size_t>(n_vars), 0)),
                   std::move(value));
  }
  return ScalarForm(n_vars, 0, std::move(coeffs));
}

ScalarForm ScalarForm::monomial(int n_vars, MultiIndex alpha, Rational value) {
  const int degree = alpha.length();
  std::map<MultiIndex, Rational> coeffs;
  if (value != 0) coeffs.emplace(std::move(alpha), std::move(value));
  return ScalarForm(n_vars, degree, std::move(coeffs));
}

Rational ScalarForm::coefficient(const MultiIndex& alpha) const {
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
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational ScalarForm::evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != n_vars_) {
    throw std::invalid_argument("evaluation point has " + std::to_string(x.size()) +
                                " coordinates, expected " + std::to_string(n_vars_));
  }
  const auto powers = power_table(x, degree_);
  Rational sum = 0;
  for (const auto& [alpha, c] : coeffs_) {
    Rational term = c;
    for (int i = 0; i < n_vars_; ++i) {
      term *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(alpha[i])];
    }
    sum += term;
  }
  return sum;
}

ScalarForm operator+(const ScalarForm& f, const ScalarForm& g) {
  check_compatible(f, g);
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("cannot add forms of degrees " + std::to_string(f.degree()) +
                                " and " + std::to_string(g.degree()));
  }
  std::map<MultiIndex, Rational> coeffs = f.coeffs_;
  for (const auto& [alpha, c] : g.coeffs_) {
    auto [it, inserted] = coeffs.emplace(alpha, c);
    if (!inserted) it->second += c;
  }
  return ScalarForm(f.n_vars(), f.degree(), std::move(coeffs));
}

ScalarForm operator*(const ScalarForm& f, const ScalarForm& g) {
  check_compatible(f, g);
  std::map<MultiIndex, Rational> coeffs;
  for (const auto& [alpha, a] : f.coeffs_) {
    for (const auto& [beta, b] : g.coeffs_) {
      std::vector<int> e(static_cast<std::size_t>(f.n_vars()));
      for (int i = 0; i < f.n_vars(); ++i) {
        e[static_cast<std::size_t>(i)] = alpha[i] + beta[i];
      }
      auto [it, inserted] = coeffs.emplace(MultiIndex(std::move(e)), a * b);
      if (!inserted) it->second += a * b;
    }
  }
  return ScalarForm(f.n_vars(), f.degree() + g.degree(), std::move(coeffs));
}

ScalarForm operator*(const Rational& c, const ScalarForm& f) {
  std::map<MultiIndex, Rational> coeffs;
  if (c != 0) {
    coeffs = f.coeffs_;
    for (auto& [alpha, value] : coeffs) value *= c;
  }
  return ScalarForm(f.n_vars(), f.degree(), std::move(coeffs));
}

ScalarForm sigma_mul(const ScalarForm& f) {
  std::map<MultiIndex, Rational> coeffs;
  for (const auto& [alpha, c] : f.coefficients()) {
    for (int i = 0; i < f.n_vars(); ++i) {
      auto [it, inserted] = coeffs.emplace(alpha.bumped(i), c);
      if (!inserted) it->second += c;
    }
  }
  return ScalarForm(f.n_vars(), f.degree() + 1, std::move(coeffs));
}

}  // namespace polya
