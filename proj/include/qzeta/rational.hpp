// Copyright 2026 The qzeta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qzeta {

/**
 * @brief Arbitrary-precision rational number, always in lowest terms.
 *
 * Thin value wrapper over GMP's mpq_class. Invariants: gcd(|num|, den) = 1,
 * den > 0, zero is 0/1. All arithmetic is exact; division by zero throws
 * std::domain_error.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long value) : v_(static_cast<signed long>(value)) {}  // NOLINT: implicit by design
  Rational(int value) : v_(static_cast<signed long>(value)) {}   // NOLINT: implicit by design
  explicit Rational(const mpz_class& value) : v_(value) {}

  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p" or "p/q" (optional leading '-'); rejects anything else.
  static Rational from_string(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Lowest-terms decimal string: "p" when den = 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Exact integer power; negative exponents invert (base 0 throws).
  Rational pow(long exponent) const;

  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  /// Reciprocal; throws std::domain_error on zero.
  Rational inverse() const { return Rational(1) / *this; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact integer-valued rational; n < 0 throws std::domain_error.
Rational factorial(long n);

}  // namespace qzeta
