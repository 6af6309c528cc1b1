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

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "qzeta/rational.hpp"

namespace qzeta {
namespace {

TEST_SUITE("rational") {

TEST_CASE("construction canonicalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-12, -8) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("from_string accepts integers and fractions") {
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK(Rational::from_string("-7/3") == Rational(-7, 3));
  CHECK(Rational::from_string("6/4") == Rational(3, 2));
}

TEST_CASE("num and den expose canonical parts") {
  Rational r(-10, 15);
  CHECK(r.num() == mpz_class(-2));
  CHECK(r.den() == mpz_class(3));
}

TEST_CASE("predicates") {
  CHECK(Rational(0).is_zero());
  CHECK_FALSE(Rational(1, 3).is_zero());
  CHECK(Rational(-4).is_integer());
  CHECK_FALSE(Rational(-4, 3).is_integer());
  CHECK(Rational(2, 5).sign() == 1);
  CHECK(Rational(-2, 5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("field arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));

  Rational c(7, 10);
  c += Rational(3, 10);
  CHECK(c == Rational(1));
  c -= Rational(5, 4);
  CHECK(c == Rational(-1, 4));
  c *= Rational(-8);
  CHECK(c == Rational(2));
  c /= Rational(4, 3);
  CHECK(c == Rational(3, 2));

  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  Rational d(1);
  CHECK_THROWS_AS(d /= Rational(0), std::domain_error);
}

TEST_CASE("no drift under many small operations") {
  // 1/1*2 + 1/2*3 + ... telescopes to 1 - 1/(k+1).
  Rational sum(0);
  for (long k = 1; k <= 200; ++k) sum += Rational(1, k * (k + 1));
  CHECK(sum == Rational(200, 201));
}

TEST_CASE("comparisons order by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(5) > Rational(4));
  CHECK(Rational(7, 2) >= Rational(7, 2));
}

TEST_CASE("pow handles negative exponents and zero") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(0).pow(4) == Rational(0));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("abs and inverse") {
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
  CHECK(Rational(3, 4).abs() == Rational(3, 4));
  CHECK(Rational(-5, 2).inverse() == Rational(-2, 5));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("str and stream output agree") {
  Rational r(-22, 7);
  std::ostringstream os;
  os << r;
  CHECK(os.str() == "-22/7");
  CHECK(r.str() == "-22/7");
  CHECK(Rational(9).str() == "9");
}

TEST_CASE("big values stay exact") {
  // 100! / 98! = 99 * 100 without overflow.
  Rational big = factorial(100) / factorial(98);
  CHECK(big == Rational(9900));
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(1) == Rational(1));
  CHECK(factorial(12) == Rational(479001600));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

}  // TEST_SUITE

}  // namespace
}  // namespace qzeta
