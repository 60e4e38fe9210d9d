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

#include "nashlab/rational.h"

#include <cmath>

#include "nashlab/errors.h"

namespace nashlab {

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 ||
      slash + 1 == text.size()) {
    throw ArgumentError("rational must have the form \"num/den\": '" +
                        std::string(text) + "'");
  }
  auto is_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) {
    throw ArgumentError("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d <= 0) {
    throw ArgumentError("rational denominator must be positive: '" +
                        std::string(text) + "'");
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    throw ArgumentError("rational is not in lowest terms: '" +
                        std::string(text) + "'");
  }
  Rational q(n, d);
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw ArgumentError("cannot convert a non-finite double to a rational");
  }
  Rational q(value);
  q.canonicalize();
  return q;
}

}  // namespace nashlab
