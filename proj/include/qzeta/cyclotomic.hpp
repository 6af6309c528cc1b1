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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "qzeta/polynomial.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

/// N-th cyclotomic polynomial, by recursive exact division of x^N - 1.
/// Memoized per process; N >= 1.
RationalPolynomial cyclotomic_polynomial(int order);

class CycloContext;
using CycloContextPtr = std::shared_ptr<const CycloContext>;

/**
 * @brief Shared immutable data for arithmetic in Q(zeta_N): the modulus Phi_N
 * plus reduction tables for x^k and zeta^k.
 *
 * Contexts are cached per order and safe to share across threads; concurrent
 * get() calls with the same order return the same context.
 */
class CycloContext {
 public:
  /// Cached context for Q(zeta_N); N < 2 throws std::domain_error.
  static CycloContextPtr get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }  // = phi(order)
  const RationalPolynomial& modulus() const { return phi_; }

  /// Coefficients of zeta^k reduced mod Phi (k taken mod order).
  const std::vector<Rational>& zeta_power(long k) const;
  /// Coefficients of x^(degree + t) reduced mod Phi, 0 <= t <= degree - 2.
  const std::vector<Rational>& fold_row(int t) const { return fold_[static_cast<std::size_t>(t)]; }

 private:
  explicit CycloContext(int order);

  int order_;
  RationalPolynomial phi_;
  int degree_;
  std::vector<std::vector<Rational>> fold_;
  std::vector<std::vector<Rational>> zeta_pow_;
};

/// Thrown when a provably irrational element is coerced to Rational; carries
/// the offending coefficient vector.
class NotRationalError : public std::runtime_error {
 public:
  NotRationalError(int order, std::vector<std::string> coeffs, const std::string& context = "");
  int order() const noexcept { return order_; }
  const std::vector<std::string>& coeffs() const noexcept { return coeffs_; }

 private:
  int order_;
  std::vector<std::string> coeffs_;
};

/**
 * @brief Element of Q(zeta_N) as a Rational coefficient vector in the basis
 * 1, zeta, ..., zeta^(phi(N)-1), reduced mod Phi_N.
 *
 * The representation is canonical: elements are equal iff their coefficient
 * vectors (and orders) agree, and an element is rational iff every coefficient
 * past the constant one vanishes. A default/Rational-constructed element has
 * no field context (order() == 1) and acts as a plain scalar; arithmetic lifts
 * it into the other operand's field. Combining two different genuine orders is
 * a hard error, never an implicit embedding.
 */
class CycloElement {
 public:
  CycloElement() : coeffs_{Rational(0)} {}
  explicit CycloElement(Rational value) : coeffs_{std::move(value)} {}
  CycloElement(CycloContextPtr context, std::vector<Rational> coeffs);

  static CycloElement from_rational(const CycloContextPtr& context, const Rational& value);
  static CycloElement zero(const CycloContextPtr& context) {
    return from_rational(context, Rational(0));
  }
  static CycloElement one(const CycloContextPtr& context) {
    return from_rational(context, Rational(1));
  }

  bool has_context() const { return ctx_ != nullptr; }
  const CycloContextPtr& context() const { return ctx_; }
  int order() const { return ctx_ ? ctx_->order() : 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// coeffs[0] when rational; otherwise throws NotRationalError.
  Rational as_rational() const;

  /// Image under the automorphism zeta -> zeta^(N-1) (complex conjugation).
  CycloElement conjugate() const;
  /// (x + conjugate(x)) / 2.
  CycloElement real_part() const;
  /// real_part() coerced to Rational; throws NotRationalError when irrational.
  Rational real_part_rational() const;
  /// (x - conjugate(x)) / 2, i.e. sqrt(-1) times the usual imaginary part.
  CycloElement imaginary_part() const;

  /// Multiplicative inverse via extended Euclid against Phi_N; zero throws
  /// std::domain_error.
  CycloElement inverse() const;
  /// Iterated-multiplication power; negative exponents invert first.
  CycloElement pow(long exponent) const;

  CycloElement operator-() const;
  friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const Rational& s, const CycloElement& x);
  CycloElement& operator+=(const CycloElement& o) { return *this = *this + o; }
  CycloElement& operator-=(const CycloElement& o) { return *this = *this - o; }
  CycloElement& operator*=(const CycloElement& o) { return *this = *this * o; }

  /// Mathematical equality: rational values compare across orders; genuine
  /// field elements compare by order and coefficient vector.
  friend bool operator==(const CycloElement& a, const CycloElement& b);

  /// Readable basis expansion in the symbol z, e.g. "-(3/8)z+3/8".
  std::string str() const;
  /// Serialization schema: { "order": N, "coeffs": ["p/q", ...] }.
  nlohmann::json to_json() const;

 private:
  CycloContextPtr ctx_;            // null = contextless rational scalar
  std::vector<Rational> coeffs_;   // size degree(), or 1 when contextless
};

/// zeta_N^k (k reduced mod N).
CycloElement root_power(const CycloContextPtr& context, long k);

/// Element-by-element multiplication count for the calling thread; the DP
/// evaluators' cost contract is asserted against this in tests.
std::uint64_t element_multiplications();
void reset_element_multiplications();

}  // namespace qzeta
