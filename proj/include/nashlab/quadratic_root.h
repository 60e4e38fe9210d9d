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

#ifndef NASHLAB_QUADRATIC_ROOT_H_
#define NASHLAB_QUADRATIC_ROOT_H_

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "nashlab/rational.h"

namespace nashlab {

// An element (p + q*sqrt(s)) / r of a real quadratic field, used for the
// roots of the degree-two equilibrium conditions along a line.
//
// Canonical form: r > 0, gcd(p, q, r) = 1, q = 0 iff s = 0, and s >= 2 has
// no square factor below 2^16 and is not a perfect square. Full squarefree
// normalization would need integer factorization; ordering and equality are
// decided by exact sign analysis and never rely on the representation.
class QuadraticRoot {
 public:
  QuadraticRoot() : QuadraticRoot(Rational(0)) {}
  explicit QuadraticRoot(const Rational& value);
  QuadraticRoot(Integer p, Integer q, Integer s, Integer r);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& s() const { return s_; }
  const Integer& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  Rational to_rational() const;  // throws unless is_rational()
  double approx() const { return approx_; }

  // "num/den" when rational, otherwise "(p+q*sqrt(s))/r" (or "(p-|q|*...").
  std::string to_string() const;

  // a + b * this, which stays in the same field.
  QuadraticRoot affine(const Rational& a, const Rational& b) const;

  // Exact sign of c0 + c1*t + c2*t^2 at t = *this.
  int sign_of_quadratic(const Rational& c0, const Rational& c1,
                        const Rational& c2) const;

  // Rational lo <= value <= hi obtained from a 2^-bits bracket of sqrt(s).
  std::pair<Rational, Rational> bracket(int bits) const;

  friend std::strong_ordering compare_roots(const QuadraticRoot& a,
                                            const QuadraticRoot& b);
  friend std::strong_ordering operator<=>(const QuadraticRoot& a,
                                          const QuadraticRoot& b) {
    return compare_roots(a, b);
  }
  friend bool operator==(const QuadraticRoot& a, const QuadraticRoot& b) {
    return compare_roots(a, b) == std::strong_ordering::equal;
  }

 private:
  void canonicalize();

  Integer p_, q_, s_, r_;
  double approx_ = 0.0;
};

std::strong_ordering compare_roots(const QuadraticRoot& a,
                                   const QuadraticRoot& b);

// Sign of a + b*sqrt(s) for integers a, b and s >= 0.
int sign_of_surd(const Integer& a, const Integer& b, const Integer& s);

// Distinct real roots of c0 + c1*t + c2*t^2, ascending. The polynomial must
// not be identically zero.
std::vector<QuadraticRoot> real_roots(const Rational& c0, const Rational& c1,
                                      const Rational& c2);

// Some rational strictly between a < b.
Rational rational_between(const QuadraticRoot& a, const QuadraticRoot& b);

}  // namespace nashlab

#endif  // NASHLAB_QUADRATIC_ROOT_H_
