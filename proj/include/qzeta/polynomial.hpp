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

#include <string>
#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

/**
 * @brief Univariate polynomial with Rational coefficients, exact everywhere.
 *
 * Coefficients are stored low degree first with no trailing zeros; the zero
 * polynomial is the empty list and reports degree() == -1.
 */
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    normalize();
  }

  static RationalPolynomial constant(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c});
  }
  /// c * x^deg.
  static RationalPolynomial monomial(const Rational& c, int deg);
  /// The identity polynomial x.
  static RationalPolynomial variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of x^k; zero outside the stored range.
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Leading coefficient; zero polynomial throws std::domain_error.
  Rational leading() const {
    if (is_zero()) throw std::domain_error("RationalPolynomial: zero polynomial has no leading coefficient");
    return c_.back();
  }

  /// Exact evaluation by Horner's rule.
  Rational operator()(const Rational& x) const;

  RationalPolynomial operator-() const;
  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.c_ == b.c_;
  }

  /// Human-readable form, highest degree first, e.g. "n^2-3n+2" or "(1/2)n-1".
  std::string str(const std::string& var = "n") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

struct PolyDivMod {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};

/// Exact Euclidean division a = q*b + r with deg r < deg b; b = 0 throws.
PolyDivMod divmod(const RationalPolynomial& a, const RationalPolynomial& b);

struct PolyExtGcd {
  RationalPolynomial g;  // monic gcd (zero only when both inputs are zero)
  RationalPolynomial s;
  RationalPolynomial t;  // s*a + t*b = g
};

PolyExtGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

}  // namespace qzeta
