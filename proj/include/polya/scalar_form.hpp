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

#include <map>
#include <span>
#include <vector>

#include "polya/multi_index.hpp"
#include "polya/rational.hpp"

namespace polya {

// Homogeneous polynomial of a fixed degree with exact rational coefficients,
// stored sparsely (zero coefficients are never kept). The zero form is the
// empty map; its degree is carried as metadata so matrix entries stay
// degree-consistent.
//
// Values are immutable after construction and every operation is pure.
class ScalarForm {
 public:
  // Zero form.
  ScalarForm(int n_vars, int degree);

  // Throws std::invalid_argument if a key has the wrong variable count or
  // length. Zero coefficients are dropped.
  ScalarForm(int n_vars, int degree, std::map<MultiIndex, Rational> coeffs);

  // Sigma = x_1 + ... + x_n.
  static ScalarForm sigma(int n_vars);

  static ScalarForm constant(int n_vars, Rational value);

  static ScalarForm monomial(int n_vars, MultiIndex alpha, Rational value);

  int n_vars() const { return n_vars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Sparse canonical coefficient map, iterated in canonical monomial order.
  const std::map<MultiIndex, Rational>& coefficients() const { return coeffs_; }

  // Coefficient of x^alpha; zero when absent.
  // Throws std::invalid_argument when |alpha| != degree.
  Rational coefficient(const MultiIndex& alpha) const;

  // Exact evaluation at a rational point (dimension-checked).
  Rational evaluate(std::span<const Rational> x) const;

  bool operator==(const ScalarForm& other) const = default;

  friend ScalarForm operator+(const ScalarForm& f, const ScalarForm& g);
  friend ScalarForm operator*(const ScalarForm& f, const ScalarForm& g);
  friend ScalarForm operator*(const Rational& c, const ScalarForm& f);

 private:
  int n_vars_;
  int degree_;
  std::map<MultiIndex, Rational> coeffs_;
};

// Sigma * f in one pass: the coefficient of x^beta in the result is the sum
// of f's coefficients at beta - e_i over every i with beta_i >= 1.
ScalarForm sigma_mul(const ScalarForm& f);

}  // namespace polya
