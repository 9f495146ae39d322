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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polya/rational.hpp"

namespace polya {

// Exponent vector of a monomial: alpha = (a_1,...,a_n) with a_i >= 0.
//
// operator< is the project's canonical monomial order: lower total degree
// first, and within one degree the x1-major listing, e.g. for n = 2, d = 2:
// (2,0), (1,1), (0,2). Every container keyed by MultiIndex iterates in this
// order, which is what makes reports and serialized files deterministic.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> exponents);

  // Number of variables n.
  int size() const { return static_cast<int>(exponents_.size()); }

  int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }

  // |alpha| = a_1 + ... + a_n.
  int length() const { return length_; }

  const std::vector<int>& exponents() const { return exponents_; }

  // alpha + e_i.
  MultiIndex bumped(int i) const;

  // alpha - e_i, or nullopt when a_i = 0.
  std::optional<MultiIndex> lowered(int i) const;

  bool operator==(const MultiIndex& other) const { return exponents_ == other.exponents_; }
  bool operator<(const MultiIndex& other) const;

  // "(2,1,0)" -- for error messages and logs.
  std::string str() const;

 private:
  std::vector<int> exponents_;
  int length_ = 0;
};

// d! / (a_1! ... a_n!). Integer-valued; returned as a Rational because every
// caller feeds it straight into rational arithmetic.
// Throws std::invalid_argument when |alpha| != degree.
Rational multinomial(int degree, const MultiIndex& alpha);

// All alpha with n_vars entries and |alpha| = degree, in canonical order.
std::vector<MultiIndex> exponents_of_degree(int n_vars, int degree);

// C(n_vars + degree - 1, degree), the number of degree-d monomials.
unsigned long monomial_count(int n_vars, int degree);

}  // namespace polya
