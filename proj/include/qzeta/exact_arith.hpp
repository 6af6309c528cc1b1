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

#include <utility>
#include <vector>

#include "qzeta/polynomial.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

/**
 * @brief Generalized binomial coefficient n(n-1)...(n-k+1)/k!.
 *
 * n may be negative (product formula); 0 <= n < k yields 0. k < 0 throws
 * std::domain_error rather than returning 0, to surface index bugs.
 */
Rational binomial(long n, long k);

/**
 * @brief Table of Bernoulli numbers B_0..B_max computed by the exact
 * recurrence sum_{j=0}^{k} C(k+1,j) B_j = 0 (k >= 1), i.e. the x/(e^x - 1)
 * convention with B_1 = -1/2.
 */
class BernoulliTable {
 public:
  explicit BernoulliTable(int max_index);

  int max_index() const { return static_cast<int>(b_.size()) - 1; }
  const Rational& at(int index) const {
    if (index < 0 || index > max_index()) throw std::out_of_range("BernoulliTable: index out of range");
    return b_[static_cast<std::size_t>(index)];
  }
  const std::vector<Rational>& values() const { return b_; }

 private:
  std::vector<Rational> b_;
};

/// Convenience builder matching the table type above.
inline BernoulliTable bernoulli(int max_index) { return BernoulliTable(max_index); }

/**
 * @brief The unique polynomial of degree < #points through the given points.
 *
 * Newton divided differences internally (O(k^2) exact operations), result
 * normalized to monomial coefficients. Duplicate abscissae or an empty list
 * throw std::domain_error.
 */
RationalPolynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/**
 * @brief Exact determinant of a lower-Hessenberg matrix.
 *
 * Uses the leading-minor recurrence
 *   det(A_k) = sum_{i=1}^{k} (-1)^{k-i} a_{k,i} (prod_{j=i}^{k-1} a_{j,j+1}) det(A_{i-1}),
 * O(k) multiplications per row. Non-square input or a nonzero entry above the
 * first superdiagonal throws std::domain_error. The empty matrix has
 * determinant 1.
 */
Rational hessenberg_determinant(const std::vector<std::vector<Rational>>& matrix);

struct IntegerRootFactorization {
  std::vector<long> roots;        // ascending, repeated per multiplicity
  RationalPolynomial remainder;   // p / prod (x - r); keeps any rational scale
};

/**
 * @brief Divides out (x - r) for every integer root r with |r| <= search_bound,
 * repeatedly while r remains a root. Trial division only; the remainder has no
 * integer roots within the bound.
 */
IntegerRootFactorization integer_root_factorization(const RationalPolynomial& p, long search_bound);

/**
 * @brief Canonical factored rendering, e.g. "-(n-1)(n-5)/12" or
 * "(n-1)(n-2)(7n^6-...)/3628800".
 *
 * Layout: sign, integer scale (omitted when 1), linear factors over the
 * integer roots in ascending order ("n" for root 0, "^k" for multiplicity),
 * the primitive integer cofactor with positive leading coefficient in
 * parentheses, then "/den". Deterministic: equal polynomials render equally.
 */
std::string factored_string(const RationalPolynomial& p, long search_bound = 100);

}  // namespace qzeta
