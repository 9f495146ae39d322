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

#include <span>
#include <vector>

#include "polya/rational.hpp"
#include "polya/sym_matrix.hpp"

namespace polya {

// Outcome of the exact positive-definiteness test. On success `minors` holds
// all r leading principal minors, each strictly positive (Sylvester's
// criterion); this vector is the auditable witness stored in certificates.
// On failure it holds the minors up to and including the first nonpositive
// one, so failing_index() identifies the leading block that broke.
struct PdResult {
  bool is_pd = false;
  std::vector<Rational> minors;

  // 1-based index of the first nonpositive minor; only meaningful when
  // !is_pd.
  int failing_index() const { return static_cast<int>(minors.size()); }
};

// Exact PD decision by fraction-free (Bareiss) elimination: the pivot after
// step k equals the (k+1)-th leading principal minor, and every division is
// exact. Stops at the first nonpositive minor. Throws std::invalid_argument
// on asymmetric input.
PdResult is_pd_exact(const SymMatrixQ& a);

// Exact PSD decision by symmetric elimination with diagonal pivoting: a
// negative diagonal entry refutes, a positive diagonal pivot reduces to the
// Schur complement, and once every remaining diagonal entry is zero the
// remaining block must vanish entirely (a zero diagonal with a nonzero
// off-diagonal entry refutes PSD). Throws std::invalid_argument on
// asymmetric input.
bool is_psd_exact(const SymMatrixQ& a);

// Approximate smallest eigenvalue via a standard double-precision symmetric
// eigensolver. Ordering/pruning heuristic only; never a certificate.
double min_eig_float(const SymMatrixQ& a);

// v^T A v, exact.
Rational rayleigh(const SymMatrixQ& a, std::span<const Rational> v);

// For symmetric `a` that fails is_pd_exact, returns a nonzero rational v with
// v^T a v <= 0, obtained from the exact LDL^T factorization of the failing
// leading block (v^T a v equals the first nonpositive pivot).
// Precondition: !is_pd_exact(a).is_pd.
std::vector<Rational> refuting_direction(const SymMatrixQ& a);

}  // namespace polya
