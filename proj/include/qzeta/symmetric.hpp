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

#ifndef QZETA_SYMMETRIC_HPP_
#define QZETA_SYMMETRIC_HPP_

#include <vector>

#include "qzeta/cyclotomic.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

/**
 * Power sums p_1..p_T and elementary symmetric functions e_1..e_K of the
 * n-1 values u_1,...,u_{n-1}. Immutable once built.
 */
struct SymmetricBasis {
  long n;
  std::vector<CycloElement> power_sums;  // power_sums[t-1] = p_t
  std::vector<CycloElement> elementary;  // elementary[k-1] = e_k

  const CycloElement& p(int t) const { return power_sums.at(static_cast<std::size_t>(t - 1)); }
  const CycloElement& e(int k) const { return elementary.at(static_cast<std::size_t>(k - 1)); }
};

/// p_t(n) = sum_{r=1}^{n-1} u_r^t, computed as a direct sum (not via the DP).
CycloElement power_sum(long n, int t);

/// e_1..e_{k_max} from p_1..p_{k_max} via Newton's identities; k_max > n-1
/// throws domain_error (e_k vanishes beyond n-1; rejected rather than padded).
SymmetricBasis elementary(long n, int k_max);

/**
 * S_{2u}(n) = sum_{r=1}^{n-1} cot^{2u}(r*pi/n), computed exactly inside
 * Q(zeta_n) via cot(r*pi/n) = -sqrt(-1)*(2u_r - 1); even powers keep the
 * result rational. u = 0 gives n-1.
 */
Rational cot_sum_exact(long n, int u);

/// Same sum by the Bernoulli-number formula over weak compositions of u
/// into 2u+1 parts; requires u >= 1.
Rational cot_sum_bernoulli(long n, int u);

/// p_t(n) = 2^{-t} * sum_{u<=t/2} binom(t,2u) (-1)^u S_{2u}(n); rational by
/// construction, and must agree with power_sum(n,t).
Rational power_sum_via_cot(long n, int t);

/// Q_m(n) = (e_1 e_m - (m+1) e_{m+1}) / m for 1 <= m <= n-2; equals the
/// average over j of Re Z_n(1^{j-1},2,1^{m-j}).
Rational q_m(long n, int m);

}  // namespace qzeta

#endif  // QZETA_SYMMETRIC_HPP_
