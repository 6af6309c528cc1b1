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

#include "qzeta/symmetric.hpp"

#include <functional>
#include <stdexcept>

#include "qzeta/exact_arith.hpp"
#include "qzeta/qmzv.hpp"

namespace qzeta {

CycloElement power_sum(long n, int t) {
  if (n < 2) throw std::domain_error("power_sum: n must be >= 2");
  if (t < 1) throw std::domain_error("power_sum: t must be >= 1");
  const CycloContextPtr ctx = CycloContext::get(static_cast<int>(n));
  CycloElement acc = CycloElement::zero(ctx);
  for (long r = 1; r <= n - 1; ++r) {
    const CycloElement ur = u(ctx, r);
    CycloElement p = ur;
    for (int k = 2; k <= t; ++k) p = p * ur;
    acc += p;
  }
  return acc;
}

SymmetricBasis elementary(long n, int k_max) {
  if (n < 2) throw std::domain_error("elementary: n must be >= 2");
  if (k_max < 1 || k_max > n - 1) {
    throw std::domain_error("elementary: k_max must satisfy 1 <= k_max <= n-1");
  }
  SymmetricBasis basis;
  basis.n = n;
  basis.power_sums.reserve(static_cast<std::size_t>(k_max));
  for (int t = 1; t <= k_max; ++t) basis.power_sums.push_back(power_sum(n, t));
  // Newton: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i, with e_0 = 1.
  const CycloContextPtr ctx = CycloContext::get(static_cast<int>(n));
  std::vector<CycloElement> e{CycloElement::one(ctx)};  // e[0] = e_0
  for (int k = 1; k <= k_max; ++k) {
    CycloElement acc = CycloElement::zero(ctx);
    for (int i = 1; i <= k; ++i) {
      CycloElement term = e[static_cast<std::size_t>(k - i)] * basis.p(i);
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    e.push_back(Rational(1, k) * acc);
  }
  basis.elementary.assign(e.begin() + 1, e.end());
  return basis;
}

Rational cot_sum_exact(long n, int u_half) {
  if (n < 2) throw std::domain_error("cot_sum_exact: n must be >= 2");
  if (u_half < 0) throw std::domain_error("cot_sum_exact: u must be >= 0");
  if (u_half == 0) return Rational(n - 1);
  const CycloContextPtr ctx = CycloContext::get(static_cast<int>(n));
  // cot(r*pi/n) = -i(2u_r - 1), so cot^{2u} = (-1)^u (2u_r - 1)^{2u}.
  CycloElement acc = CycloElement::zero(ctx);
  for (long r = 1; r <= n - 1; ++r) {
    const CycloElement w = Rational(2) * u(ctx, r) - CycloElement::one(ctx);
    CycloElement p = w;
    for (int k = 2; k <= 2 * u_half; ++k) p = p * w;
    acc += p;
  }
  Rational result = acc.as_rational();
  if (u_half % 2 != 0) result = -result;
  return result;
}

Rational cot_sum_bernoulli(long n, int u_half) {
  if (n < 2) throw std::domain_error("cot_sum_bernoulli: n must be >= 2");
  if (u_half < 1) throw std::domain_error("cot_sum_bernoulli: u must be >= 1");
  const int u = u_half;
  const BernoulliTable bern(2 * u);
  // Per-slot factors B_{2j}/(2j)! for j = 0..u.
  std::vector<Rational> slot;
  slot.reserve(static_cast<std::size_t>(u) + 1);
  for (int j = 0; j <= u; ++j) slot.push_back(bern.at(2 * j) / factorial(2 * j));

  // sum over weak compositions (j_0,...,j_{2u}) of u of
  // n^{2 j_0} * prod_{r=0}^{2u} B_{2 j_r}/(2 j_r)!   (the r = 0 slot carries
  // both the n power and its Bernoulli factor)
  Rational total(0);
  const Rational nr(n);
  std::function<void(int, int, const Rational&)> rec =
      [&](int r, int remaining, const Rational& partial) {
        if (r == 2 * u) {
          total += partial * slot[static_cast<std::size_t>(remaining)];
          return;
        }
        for (int j = 0; j <= remaining; ++j) {
          Rational next = partial * slot[static_cast<std::size_t>(j)];
          if (r == 0) next *= nr.pow(2 * j);
          rec(r + 1, remaining - j, next);
        }
      };
  rec(0, u, Rational(1));

  const Rational sign = (u % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * Rational(n) - sign * Rational(2).pow(2 * u) * total;
}

Rational power_sum_via_cot(long n, int t) {
  if (n < 2) throw std::domain_error("power_sum_via_cot: n must be >= 2");
  if (t < 1) throw std::domain_error("power_sum_via_cot: t must be >= 1");
  Rational acc(0);
  for (int u = 0; 2 * u <= t; ++u) {
    Rational term = binomial(t, 2 * u) * cot_sum_exact(n, u);
    if (u % 2 != 0) term = -term;
    acc += term;
  }
  return acc / Rational(2).pow(t);
}

Rational q_m(long n, int m) {
  if (n < 2) throw std::domain_error("q_m: n must be >= 2");
  if (m < 1 || m > n - 2) throw std::domain_error("q_m: m must satisfy 1 <= m <= n-2");
  const SymmetricBasis basis = elementary(n, m + 1);
  const CycloElement q =
      Rational(1, m) * (basis.e(1) * basis.e(m) - Rational(m + 1) * basis.e(m + 1));
  return q.as_rational();
}

}  // namespace qzeta
