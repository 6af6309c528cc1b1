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

#include "qzeta/polynomial.hpp"

#include <sstream>

namespace qzeta {

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int deg) {
  if (deg < 0) throw std::domain_error("RationalPolynomial: negative monomial degree");
  if (c.is_zero()) return RationalPolynomial();
  std::vector<Rational> v(static_cast<std::size_t>(deg) + 1, Rational(0));
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
  if (s.is_zero()) return RationalPolynomial();
  std::vector<Rational> v(p.c_);
  for (auto& c : v) c *= s;
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coeff(k);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? '-' : '+');
    }
    const Rational a = c.abs();
    const bool unit = (a == Rational(1));
    if (k == 0) {
      os << a.str();
    } else {
      if (!unit) {
        if (a.is_integer()) {
          os << a.str();
        } else {
          os << '(' << a.str() << ')';
        }
      }
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

PolyDivMod divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  RationalPolynomial q;
  RationalPolynomial r = a;
  const Rational lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const RationalPolynomial t =
        RationalPolynomial::monomial(r.leading() * lead_inv, r.degree() - b.degree());
    q += t;
    r -= t * b;
  }
  return {q, r};
}

PolyExtGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial r0 = a, r1 = b;
  RationalPolynomial s0 = RationalPolynomial::constant(Rational(1)), s1;
  RationalPolynomial t0, t1 = RationalPolynomial::constant(Rational(1));
  while (!r1.is_zero()) {
    const PolyDivMod d = divmod(r0, r1);
    const RationalPolynomial r2 = d.remainder;
    const RationalPolynomial s2 = s0 - d.quotient * s1;
    const RationalPolynomial t2 = t0 - d.quotient * t1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (!r0.is_zero()) {
    const Rational scale = r0.leading().inverse();  // make the gcd monic
    r0 = scale * r0;
    s0 = scale * s0;
    t0 = scale * t0;
  }
  return {r0, s0, t0};
}

}  // namespace qzeta
