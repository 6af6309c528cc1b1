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

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qzeta/exact_arith.hpp"
#include "qzeta/qmzv.hpp"
#include "qzeta/symmetric.hpp"

namespace qzeta {
namespace {

// Coefficients of prod_r (1 + u_r X), an oracle for the elementary functions
// that never touches Newton's identities.
std::vector<CycloElement> product_coefficients(long n) {
  const CycloContextPtr ctx = CycloContext::get(static_cast<int>(n));
  std::vector<CycloElement> c{CycloElement::one(ctx)};
  for (long r = 1; r <= n - 1; ++r) {
    const CycloElement ur = u(ctx, r);
    c.push_back(CycloElement::zero(ctx));
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
      c[k] += c[k - 1] * ur;
    }
  }
  return c;
}

// Average over the position of the single 2 in (1^(j-1),2,1^(m-j)).
Rational averaged_real_part(long n, int m) {
  Rational acc(0);
  for (int j = 1; j <= m; ++j) {
    acc += evaluate(n, Composition::one_two_one(j - 1, m - j)).value.real_part_rational();
  }
  return acc / Rational(m);
}

TEST_SUITE("symmetric") {

TEST_CASE("power sums match direct hand values") {
  CHECK(power_sum(4, 2).as_rational() == Rational(1, 4));
  CHECK(power_sum(2, 3).as_rational() == Rational(1, 8));
  for (long n = 2; n <= 12; ++n) {
    CHECK(power_sum(n, 1).as_rational() == Rational(n - 1, 2));
  }
  CHECK_THROWS_AS(power_sum(1, 1), std::domain_error);
  CHECK_THROWS_AS(power_sum(4, 0), std::domain_error);
}

TEST_CASE("power sums are always rational") {
  for (long n = 2; n <= 10; ++n) {
    for (int t = 1; t <= 6; ++t) {
      CHECK(power_sum(n, t).is_rational());
    }
  }
}

TEST_CASE("newton elementary functions match the product expansion") {
  for (long n = 2; n <= 12; ++n) {
    const SymmetricBasis basis = elementary(n, static_cast<int>(n - 1));
    const std::vector<CycloElement> prod = product_coefficients(n);
    REQUIRE(basis.elementary.size() == static_cast<std::size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(basis.e(k) == prod[static_cast<std::size_t>(k)]);
      // Every e_k here is in fact rational: binomial(n, k+1)/n.
      CHECK(basis.e(k).as_rational() == binomial(n, k + 1) / Rational(n));
    }
    CHECK(basis.e(1).as_rational() == Rational(n - 1, 2));
    CHECK(basis.e(static_cast<int>(n - 1)).as_rational() == Rational(1, n));
    CHECK(basis.n == n);
    // Stored power sums agree with the standalone routine.
    for (int t = 1; t <= n - 1; ++t) {
      CHECK(basis.p(t) == power_sum(n, t));
    }
  }
  CHECK(elementary(9, 1).e(1).as_rational() == Rational(4));
  CHECK_THROWS_AS(elementary(5, 5), std::domain_error);
  CHECK_THROWS_AS(elementary(5, 0), std::domain_error);
  CHECK_THROWS_AS(elementary(1, 1), std::domain_error);
}

TEST_CASE("cotangent power sums, exact route") {
  CHECK(cot_sum_exact(5, 0) == Rational(4));
  CHECK(cot_sum_exact(4, 1) == Rational(2));
  CHECK(cot_sum_exact(6, 1) == Rational(20, 3));
  for (long n = 2; n <= 14; ++n) {
    // Classical values: sum cot^2 = (n-1)(n-2)/3, and the quartic analogue.
    CHECK(cot_sum_exact(n, 1) == Rational((n - 1) * (n - 2), 3));
    CHECK(cot_sum_exact(n, 2) ==
          Rational((n - 1) * (n - 2) * (n * n + 3 * n - 13), 45));
  }
  CHECK_THROWS_AS(cot_sum_exact(1, 1), std::domain_error);
  CHECK_THROWS_AS(cot_sum_exact(5, -1), std::domain_error);
}

TEST_CASE("bernoulli route agrees with the exact route") {
  for (long n = 2; n <= 15; ++n) {
    for (int uu = 1; uu <= 4; ++uu) {
      CAPTURE(n);
      CAPTURE(uu);
      CHECK(cot_sum_bernoulli(n, uu) == cot_sum_exact(n, uu));
    }
  }
  CHECK_THROWS_AS(cot_sum_bernoulli(5, 0), std::domain_error);
}

TEST_CASE("power sums through cotangent sums") {
  CHECK(power_sum_via_cot(4, 1) == Rational(3, 2));
  CHECK(power_sum_via_cot(7, 2) == Rational(-1));
  CHECK(power_sum_via_cot(5, 3) == Rational(-1));
  for (long n = 2; n <= 12; ++n) {
    for (int t = 1; t <= 8; ++t) {
      CAPTURE(n);
      CAPTURE(t);
      CHECK(power_sum_via_cot(n, t) == power_sum(n, t).as_rational());
    }
  }
}

TEST_CASE("q values from the elementary basis") {
  CHECK(q_m(4, 2) == Rational(3, 8));
  CHECK(q_m(7, 2) == Rational(0));
  CHECK(q_m(10, 2) == Rational(-9, 2));
  CHECK_THROWS_AS(q_m(4, 0), std::domain_error);
  CHECK_THROWS_AS(q_m(4, 3), std::domain_error);
  CHECK_THROWS_AS(q_m(2, 1), std::domain_error);
}

TEST_CASE("q values equal the averaged depth-m real parts") {
  for (long n = 3; n <= 10; ++n) {
    for (int m = 1; m <= 3 && m <= n - 2; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(q_m(n, m) == averaged_real_part(n, m));
    }
  }
}

TEST_CASE("averaged real part is a polynomial of degree m+1 in n") {
  for (int m = 1; m <= 5; ++m) {
    // Small n give the degenerate-but-on-curve samples: 0 while the sums are
    // empty, then 1/(2(m+1)) at n = m+1.
    CHECK(averaged_real_part(m + 1, m) == Rational(1, 2 * (m + 1)));
    std::vector<std::pair<Rational, Rational>> pts;
    for (long n = 1; n <= m + 3; ++n) {
      pts.emplace_back(Rational(n), averaged_real_part(n, m));
    }
    const RationalPolynomial poly = lagrange_interpolate(pts);
    CAPTURE(m);
    CHECK(poly.degree() == m + 1);
    // The interpolant reproduces the closed form well past its nodes.
    for (long n = m + 4; n <= m + 8; ++n) {
      CHECK(poly(Rational(n)) == q_m(n, m));
    }
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace qzeta
