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

#include "nashlab/quadratic_root.h"

#include <algorithm>

#include "nashlab/errors.h"

namespace nashlab {

namespace {

constexpr unsigned long kTrialDivisionBound = 1UL << 16;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialDivisionBound; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Integer coefficients with the same sign pattern as the rational ones.
void clear_denominators(const Rational& c0, const Rational& c1,
                        const Rational& c2, Integer& k0, Integer& k1,
                        Integer& k2) {
  const Integer d = lcm(lcm(c0.get_den(), c1.get_den()), c2.get_den());
  k0 = c0.get_num() * (d / c0.get_den());
  k1 = c1.get_num() * (d / c1.get_den());
  k2 = c2.get_num() * (d / c2.get_den());
}

// Sign of a + b*sqrt(s) + c*sqrt(t).
int sign_of_two_surds(const Integer& a, const Integer& b, const Integer& s,
                      const Integer& c, const Integer& t) {
  if (c == 0 || t == 0) return sign_of_surd(a, b, s);
  if (b == 0 || s == 0) return sign_of_surd(a, c, t);
  if (s == t) return sign_of_surd(a, b + c, s);
  const int sx = sign_of_surd(a, b, s);
  const int sy = sgn(c);
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // |X| vs |Y| with X = a + b sqrt(s), Y = c sqrt(t):
  // X^2 - Y^2 = (a^2 + b^2 s - c^2 t) + 2ab sqrt(s).
  const Integer rational_part = a * a + b * b * s - c * c * t;
  const Integer surd_part = 2 * a * b;
  const int d = sign_of_surd(rational_part, surd_part, s);
  if (d == 0) return 0;
  return d > 0 ? sx : sy;
}

}  // namespace

int sign_of_surd(const Integer& a, const Integer& b, const Integer& s) {
  const int sa = sgn(a);
  const int sb = (s == 0) ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const int c = cmp(Integer(a * a), Integer(b * b * s));
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

QuadraticRoot::QuadraticRoot(const Rational& value)
    : p_(value.get_num()), q_(0), s_(0), r_(value.get_den()) {
  canonicalize();
}

QuadraticRoot::QuadraticRoot(Integer p, Integer q, Integer s, Integer r)
    : p_(std::move(p)), q_(std::move(q)), s_(std::move(s)), r_(std::move(r)) {
  if (r_ == 0) throw ArgumentError("QuadraticRoot: zero denominator");
  if (s_ < 0) throw ArgumentError("QuadraticRoot: negative radicand");
  canonicalize();
}

void QuadraticRoot::canonicalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_ == 0 || s_ == 0) {
    q_ = 0;
    s_ = 0;
  } else {
    for (unsigned long prime : small_primes()) {
      const unsigned long sq = prime * prime;
      if (cmp(s_, sq) < 0) break;
      while (mpz_divisible_ui_p(s_.get_mpz_t(), sq)) {
        mpz_divexact_ui(s_.get_mpz_t(), s_.get_mpz_t(), sq);
        q_ *= prime;
      }
    }
    if (mpz_perfect_square_p(s_.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), s_.get_mpz_t());
      p_ += q_ * root;
      q_ = 0;
      s_ = 0;
    }
  }
  Integer g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
  mpf_class v(0, 192), root(0, 192);
  v = p_;
  if (q_ != 0) {
    mpf_class sf(s_, 192);
    root = sqrt(sf);
    v += root * mpf_class(q_, 192);
  }
  v /= mpf_class(r_, 192);
  approx_ = v.get_d();
}

Rational QuadraticRoot::to_rational() const {
  if (!is_rational()) throw DomainError("QuadraticRoot is irrational");
  Rational out(p_, r_);
  out.canonicalize();
  return out;
}

std::string QuadraticRoot::to_string() const {
  if (is_rational()) return nashlab::to_string(to_rational());
  std::string out = "(" + p_.get_str();
  out += q_ < 0 ? "-" : "+";
  out += Integer(abs(q_)).get_str() + "*sqrt(" + s_.get_str() + "))/" +
         r_.get_str();
  return out;
}

QuadraticRoot QuadraticRoot::affine(const Rational& a,
                                    const Rational& b) const {
  const Integer& an = a.get_num();
  const Integer& ad = a.get_den();
  const Integer& bn = b.get_num();
  const Integer& bd = b.get_den();
  return QuadraticRoot(an * bd * r_ + bn * ad * p_, bn * ad * q_, s_,
                       ad * bd * r_);
}

int QuadraticRoot::sign_of_quadratic(const Rational& c0, const Rational& c1,
                                     const Rational& c2) const {
  Integer k0, k1, k2;
  clear_denominators(c0, c1, c2, k0, k1, k2);
  // r^2 * (k0 + k1 t + k2 t^2) with t = (p + q sqrt s) / r.
  const Integer rational_part =
      k0 * r_ * r_ + k1 * r_ * p_ + k2 * (p_ * p_ + q_ * q_ * s_);
  const Integer surd_part = k1 * r_ * q_ + 2 * k2 * p_ * q_;
  return sign_of_surd(rational_part, surd_part, s_);
}

std::pair<Rational, Rational> QuadraticRoot::bracket(int bits) const {
  if (is_rational()) {
    const Rational v = to_rational();
    return {v, v};
  }
  Integer scaled = s_;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
               2 * static_cast<mp_bitcnt_t>(bits));
  Integer m;
  mpz_sqrt(m.get_mpz_t(), scaled.get_mpz_t());
  Integer scale(1);
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(),
               static_cast<mp_bitcnt_t>(bits));
  // m / scale <= sqrt(s) < (m + 1) / scale
  Rational lo(p_ * scale + q_ * m, r_ * scale);
  Rational hi(p_ * scale + q_ * (m + 1), r_ * scale);
  lo.canonicalize();
  hi.canonicalize();
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

std::strong_ordering compare_roots(const QuadraticRoot& a,
                                   const QuadraticRoot& b) {
  const int s = sign_of_two_surds(a.p_ * b.r_ - b.p_ * a.r_, a.q_ * b.r_,
                                  a.s_, -b.q_ * a.r_, b.s_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<QuadraticRoot> real_roots(const Rational& c0, const Rational& c1,
                                      const Rational& c2) {
  Integer k0, k1, k2;
  clear_denominators(c0, c1, c2, k0, k1, k2);
  std::vector<QuadraticRoot> roots;
  if (k2 == 0) {
    if (k1 == 0) {
      if (k0 == 0) throw ArgumentError("real_roots: zero polynomial");
      return roots;
    }
    roots.emplace_back(Integer(-k0), Integer(0), Integer(0), k1);
    return roots;
  }
  const Integer disc = k1 * k1 - 4 * k2 * k0;
  if (disc < 0) return roots;
  if (disc == 0) {
    roots.emplace_back(Integer(-k1), Integer(0), Integer(0), Integer(2 * k2));
    return roots;
  }
  roots.emplace_back(Integer(-k1), Integer(-1), disc, Integer(2 * k2));
  roots.emplace_back(Integer(-k1), Integer(1), disc, Integer(2 * k2));
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rational rational_between(const QuadraticRoot& a, const QuadraticRoot& b) {
  if (!(a < b)) throw ArgumentError("rational_between needs a < b");
  for (int bits = 32;; bits *= 2) {
    const auto [alo, ahi] = a.bracket(bits);
    const auto [blo, bhi] = b.bracket(bits);
    if (ahi < blo) {
      Rational mid = (ahi + blo) / 2;
      mid.canonicalize();
      return mid;
    }
  }
}

}  // namespace nashlab
