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

#include "polya/multi_index.hpp"
#include "polya/scalar_form.hpp"
#include "polya/sym_matrix.hpp"

namespace polya {

// Symmetric r x r matrix of degree-d forms, stored as a sparse coefficient
// map alpha -> P_alpha (zero matrices absent): B = sum_{|alpha|=d} P_alpha x^alpha.
//
// Construction is permissive; validate() is the gate that checks symmetry of
// every coefficient, uniform key degree and width, and r >= 1. Operations
// below assume a validated value.
class MatrixForm {
 public:
  // Zero form.
  MatrixForm(int n_vars, int size, int degree);

  MatrixForm(int n_vars, int size, int degree, std::map<MultiIndex, SymMatrixQ> coeffs);

  // f * I_r.
  static MatrixForm scalar_identity(const ScalarForm& f, int size);

  // f as a 1x1 matrix form.
  static MatrixForm from_scalar(const ScalarForm& f);

  int n_vars() const { return n_vars_; }
  int size() const { return size_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::map<MultiIndex, SymMatrixQ>& coefficients() const { return coeffs_; }

  // Throws std::invalid_argument naming the offending coefficient.
  void validate() const;

  // P_alpha, the zero matrix when alpha is absent. Callers that quantify over
  // "all coefficients" must range over every alpha with |alpha| = degree,
  // absent ones included: a zero matrix is never positive definite.
  // Throws std::invalid_argument when |alpha| != degree.
  SymMatrixQ coefficient(const MultiIndex& alpha) const;

  // B(x), exact.
  SymMatrixQ evaluate(std::span<const Rational> x) const;

  bool operator==(const MatrixForm& other) const = default;

 private:
  int n_vars_;
  int size_;
  int degree_;
  std::map<MultiIndex, SymMatrixQ> coeffs_;
};

// Sigma * B entrywise (one step of the iterated product): degree rises by
// one and the coefficient at beta is the matrix sum of P_{beta - e_i} over
// every i with beta_i >= 1.
MatrixForm sigma_mul(const MatrixForm& b);

// The weighted expansion B = sum_{|alpha|=d} A'_alpha * multinomial(d,alpha) * x^alpha.
// Unlike MatrixForm, the map is dense over all alpha of the degree: the
// order-unit shift must see zero coefficients too.
struct WeightedNormalForm {
  int n_vars = 0;
  int size = 0;
  int degree = 0;
  std::map<MultiIndex, SymMatrixQ> coeffs;
};

// A'_alpha = P_alpha / multinomial(d, alpha) for every |alpha| = d.
WeightedNormalForm weighted_normal_form(const MatrixForm& b);

// Exact inverse of weighted_normal_form.
MatrixForm reconstruct(const WeightedNormalForm& nf);

// Least integer N >= 0 such that N*I + A'_alpha is positive semidefinite for
// every alpha. A float eigenvalue bound seeds the search; minimality is
// decided by exact PSD tests only.
long order_unit_shift(const WeightedNormalForm& nf);

}  // namespace polya
