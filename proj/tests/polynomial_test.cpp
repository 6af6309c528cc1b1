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
#include "qzeta/polynomial.hpp"

namespace qzeta {
namespace {

RationalPolynomial poly(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rational> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

TEST_SUITE("polynomial") {

TEST_CASE("normalization strips trailing zeros") {
  RationalPolynomial p(std::vector<Rational>{Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == Rational(1));
  CHECK(p.coeff(1) == Rational(2));
  CHECK(p.coeff(2) == Rational(0));
  CHECK(p.coeff(-1) == Rational(0));

  RationalPolynomial z(std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK_THROWS_AS(z.leading(), std::domain_error);
}

TEST_CASE("constant monomial variable builders") {
  CHECK(RationalPolynomial::constant(Rational(5)).degree() == 0);
  CHECK(RationalPolynomial::constant(Rational(0)).is_zero());
  RationalPolynomial m = RationalPolynomial::monomial(Rational(3, 2), 4);
  CHECK(m.degree() == 4);
  CHECK(m.coeff(4) == Rational(3, 2));
  CHECK(m.coeff(3) == Rational(0));
  CHECK(RationalPolynomial::variable()(Rational(7)) == Rational(7));
}

TEST_CASE("evaluation by Horner") {
  RationalPolynomial p = poly({2, -3, 1});  // x^2 - 3x + 2
  CHECK(p(Rational(1)) == Rational(0));
  CHECK(p(Rational(2)) == Rational(0));
  CHECK(p(Rational(1, 2)) == Rational(3, 4));
}

TEST_CASE("ring operations") {
  RationalPolynomial a = poly({1, 1});   // x + 1
  RationalPolynomial b = poly({-1, 1});  // x - 1
  CHECK(a * b == poly({-1, 0, 1}));
  CHECK(a + b == poly({0, 2}));
  CHECK(a - b == poly({2}));
  CHECK(-a == poly({-1, -1}));
  CHECK(Rational(1, 2) * a == RationalPolynomial(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));

  // Cancellation must renormalize.
  CHECK((a - a).is_zero());
  RationalPolynomial c = poly({0, 0, 1});
  c -= poly({0, 0, 1});
  CHECK(c.degree() == -1);

  // Zero annihilates products.
  CHECK((RationalPolynomial() * a).is_zero());
}

TEST_CASE("string form orders high degree first") {
  CHECK(poly({2, -3, 1}).str() == "n^2-3n+2");
  CHECK(poly({0}).str() == "0");
  CHECK(RationalPolynomial().str() == "0");
  CHECK(poly({0, 1}).str("z") == "z");
  CHECK(poly({-1, 0, 0, 1}).str() == "n^3-1");
  RationalPolynomial half(std::vector<Rational>{Rational(-1), Rational(1, 2)});
  CHECK(half.str() == "(1/2)n-1");
}

TEST_CASE("divmod is exact Euclidean division") {
  RationalPolynomial a = poly({-1, 0, 0, 0, 0, 1});  // x^5 - 1
  RationalPolynomial b = poly({-1, 1});              // x - 1
  PolyDivMod d = divmod(a, b);
  CHECK(d.remainder.is_zero());
  CHECK(d.quotient == poly({1, 1, 1, 1, 1}));
  CHECK(d.quotient * b + d.remainder == a);

  PolyDivMod e = divmod(poly({1, 2, 3}), poly({1, 1}));
  CHECK(e.quotient * poly({1, 1}) + e.remainder == poly({1, 2, 3}));
  CHECK(e.remainder.degree() < 1);

  // Degree of dividend below divisor: quotient 0, remainder the dividend.
  PolyDivMod f = divmod(poly({5}), poly({0, 0, 1}));
  CHECK(f.quotient.is_zero());
  CHECK(f.remainder == poly({5}));

  CHECK_THROWS_AS(divmod(a, RationalPolynomial()), std::domain_error);
}

TEST_CASE("extended gcd produces a monic certificate") {
  RationalPolynomial a = poly({-1, 0, 1});  // (x-1)(x+1)
  RationalPolynomial b = poly({-2, 1, 1});  // (x-1)(x+2)
  PolyExtGcd g = extended_gcd(a, b);
  CHECK(g.g == poly({-1, 1}));
  CHECK(g.s * a + g.t * b == g.g);

  // Coprime pair: gcd 1, so s is the inverse of a modulo b.
  PolyExtGcd h = extended_gcd(poly({1, 1}), poly({1, 0, 1}));
  CHECK(h.g == poly({1}));
  CHECK(h.s * poly({1, 1}) + h.t * poly({1, 0, 1}) == poly({1}));

  PolyExtGcd zz = extended_gcd(RationalPolynomial(), RationalPolynomial());
  CHECK(zz.g.is_zero());
}

}  // TEST_SUITE

}  // namespace
}  // namespace qzeta
