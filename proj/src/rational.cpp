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
#include "polya/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace polya {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class numerator(std::string(num), 10);
  if (num == text) return Rational(numerator);

  // Denominator must be a plain positive integer: the wire format is
  // canonical with q > 0.
  if (!all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string rational_to_string(const Rational& value) { return value.get_str(); }

Rational rational_pow(const Rational& value, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), value.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), value.get_den_mpz_t(), exponent);
  // num and den were coprime, so their powers are too; no canonicalize needed.
  return result;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational dyadic_floor(double value, unsigned bits) {
  const double scaled = std::floor(std::ldexp(value, static_cast<int>(bits)));
  mpz_class numerator;
  mpz_set_d(numerator.get_mpz_t(), scaled);
  mpz_class denominator = 1;
  mpz_mul_2exp(denominator.get_mpz_t(), denominator.get_mpz_t(), bits);
  Rational result(numerator, denominator);
  result.canonicalize();
  return result;
}

Rational dyadic_round(double value, unsigned bits) {
  const double scaled = std::floor(std::ldexp(value, static_cast<int>(bits)) + 0.5);
  mpz_class numerator;
  mpz_set_d(numerator.get_mpz_t(), scaled);
  mpz_class denominator = 1;
  mpz_mul_2exp(denominator.get_mpz_t(), denominator.get_mpz_t(), bits);
  Rational result(numerator, denominator);
  result.canonicalize();
  return result;
}

}  // namespace polya
