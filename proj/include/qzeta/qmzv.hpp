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

#ifndef QZETA_QMZV_HPP_
#define QZETA_QMZV_HPP_

#include <string>
#include <vector>

#include "qzeta/cyclotomic.hpp"

namespace qzeta {

/**
 * An exponent tuple (s_1,...,s_m): every part >= 1, depth >= 1.
 */
class Composition {
 public:
  explicit Composition(std::vector<long> parts);

  /// (1,1,...,1) with m parts.
  static Composition all_ones(int m);
  /// (1^a, 2, 1^b), depth a+b+1.
  static Composition one_two_one(int a, int b);
  /// Parses "1,2,1"; rejects anything but comma-separated positive integers.
  static Composition parse(const std::string& text);

  const std::vector<long>& parts() const { return parts_; }
  int depth() const { return static_cast<int>(parts_.size()); }
  long weight() const;
  long max_part() const;

  Composition reversed() const;
  bool is_palindrome() const;

  std::string str() const;  // "1,2,1"

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<long> parts_;
};

Composition reverse(const Composition& index);

/**
 * A computed zeta value together with the parameters that produced it.
 */
struct ZetaValue {
  CycloElement value;
  long n;
  long q_order;
  Composition index;
  bool star;
};

/// u_r = 1/(1 - zeta_N^r) in the given field; r = 0 mod N throws domain_error.
CycloElement u(const CycloContextPtr& ctx, long r);

/**
 * The nested sum over 1 <= i_1 < ... < i_m <= n-1 (strict) or <= (star) of
 * prod_j u_{i_j}^{s_j}, with u built from q = zeta_{q_order}^{root_exponent}.
 *
 * Empty ranges (n <= depth for strict, n <= 1 for star) return an exact,
 * contextless 0 before any field validation, so n = 1..m are valid inputs.
 * Otherwise requires q_order >= n (and hence >= 2).
 */
ZetaValue evaluate(long n, long q_order, const Composition& index, bool star,
                   long root_exponent = 1);

/// Standard case q_order = n.
ZetaValue evaluate(long n, const Composition& index, bool star = false);

/**
 * Sum over strict chains 1 <= i_1 < ... < i_m <= n of
 * prod_j 1/(1 - zeta_{(m+1)n}^{(m+1)i_j - j}).
 *
 * m = 0 returns the empty-product value 1; m > n returns 0 (empty sum).
 */
CycloElement evaluate_t(long n, int m);

}  // namespace qzeta

#endif  // QZETA_QMZV_HPP_
