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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polya {

// Exact arbitrary-precision rational. All arithmetic in the library is done
// on this type; doubles appear only in clearly-labeled approximate paths.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with q a positive integer. The result is
// canonicalized (gcd(p,q) = 1, q > 0). Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational rational_from_string(std::string_view text);

// Canonical wire format: "p" when q = 1, otherwise "p/q" with q > 0 and
// gcd(p,q) = 1.
std::string rational_to_string(const Rational& value);

// value^exponent, exact.
Rational rational_pow(const Rational& value, unsigned exponent);

double to_double(const Rational& value);

// Largest multiple of 2^-bits that is <= value. Used to round float
// diagnostics down to a nearby exact rational.
Rational dyadic_floor(double value, unsigned bits);

// Nearest multiple of 2^-bits (ties toward +inf). Used to rationalize
// approximate eigenvector components.
Rational dyadic_round(double value, unsigned bits);

}  // namespace polya
