// Copyright 2026 The nashlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NASHLAB_RATIONAL_H_
#define NASHLAB_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nashlab {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses the canonical "num/den" form: den > 0 and gcd(num, den) = 1.
// Anything else (bare integers, "2/4", "1/-3", whitespace) is rejected.
Rational parse_rational(std::string_view text);

// Always "num/den", including "0/1" and "1/1".
std::string to_string(const Rational& q);

// Exact: every finite double is a dyadic rational.
Rational rational_from_double(double value);

}  // namespace nashlab

#endif  // NASHLAB_RATIONAL_H_
