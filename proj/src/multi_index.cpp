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
#include "polya/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polya {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) {
    throw std::invalid_argument("multi-index needs at least one variable");
  }
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("negative exponent in multi-index " + str());
  }
  length_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

MultiIndex MultiIndex::bumped(int i) const {
  std::vector<int> e = exponents_;
  ++e[static_cast<std::size_t>(i)];
  return MultiIndex(std::move(e));
}

std::optional<MultiIndex> MultiIndex::lowered(int i) const {
  if (exponents_[static_cast<std::size_t>(i)] == 0) return std::nullopt;
  std::vector<int> e = exponents_;
  --e[static_cast<std::size_t>(i)];
  return MultiIndex(std::move(e));
}

bool MultiIndex::operator<(const MultiIndex& other) const {
  if (length_ != other.length_) return length_ < other.length_;
  // x1-major within a degree: (2,0) precedes (1,1) precedes (0,2).
  return std::lexicographical_compare(other.exponents_.begin(), other.exponents_.end(),
                                      exponents_.begin(), exponents_.end());
}

std::string MultiIndex::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents_[i]);
  }
  out += ')';
  return out;
}

Rational multinomial(int degree, const MultiIndex& alpha) {
  if (alpha.length() != degree) {
    throw std::invalid_argument("multinomial: |alpha| = " + std::to_string(alpha.length()) +
                                " does not match degree " + std::to_string(degree));
  }
  // d!/(a_1!...a_n!) as a product of binomials of the partial sums.
  mpz_class result = 1;
  unsigned long remaining = static_cast<unsigned long>(degree);
  for (int i = 0; i < alpha.size(); ++i) {
    const unsigned long a = static_cast<unsigned long>(alpha[i]);
    mpz_class factor;
    mpz_bin_uiui(factor.get_mpz_t(), remaining, a);
    result *= factor;
    remaining -= a;
  }
  return Rational(result);
}

std::vector<MultiIndex> exponents_of_degree(int n_vars, int degree) {
  if (n_vars < 1) throw std::invalid_argument("n_vars must be positive");
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<MultiIndex> out;
  std::vector<int> current(static_cast<std::size_t>(n_vars), 0);
  // First coordinate descending gives the canonical x1-major listing.
  auto fill = [&](auto&& self, int position, int remaining) -> void {
    if (position == n_vars - 1) {
      current[static_cast<std::size_t>(position)] = remaining;
      out.emplace_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[static_cast<std::size_t>(position)] = e;
      self(self, position + 1, remaining - e);
    }
  };
  fill(fill, 0, degree);
  return out;
}

unsigned long monomial_count(int n_vars, int degree) {
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(n_vars + degree - 1),
               static_cast<unsigned long>(degree));
  if (!count.fits_ulong_p()) {
    throw std::overflow_error("monomial count overflows unsigned long");
  }
  return count.get_ui();
}

}  // namespace polya
