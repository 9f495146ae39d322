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

namespace polya {

// Dense r x r matrix of exact rationals. Symmetry is the intended invariant;
// the raw constructors do not enforce it so that validation layers can report
// an asymmetric input instead of silently repairing it. All arithmetic here
// preserves symmetry, and the predicates in psd.hpp reject asymmetric input.
class SymMatrixQ {
 public:
  // Zero matrix.
  explicit SymMatrixQ(int size);

  // Row-major entries, size*size of them. No symmetry check.
  SymMatrixQ(int size, std::vector<Rational> row_major);

  static SymMatrixQ identity(int size);

  // No symmetry check.
  static SymMatrixQ from_rows(const std::vector<std::vector<Rational>>& rows);

  // v v^T.
  static SymMatrixQ rank_one(std::span<const Rational> v);

  int size() const { return size_; }

  const Rational& at(int i, int j) const;

  // Sets (i,j) and (j,i).
  void set(int i, int j, Rational value);

  bool is_symmetric() const;
  bool is_zero() const;

  SymMatrixQ& operator+=(const SymMatrixQ& other);
  friend SymMatrixQ operator+(SymMatrixQ a, const SymMatrixQ& b);
  friend SymMatrixQ operator-(const SymMatrixQ& a, const SymMatrixQ& b);
  friend SymMatrixQ operator*(const Rational& c, const SymMatrixQ& a);

  bool operator==(const SymMatrixQ& other) const = default;

 private:
  int size_;
  std::vector<Rational> entries_;  // row-major
};

}  // namespace polya
