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

#include "qzeta/exact_arith.hpp"

#include <cassert>
#include <sstream>

namespace qzeta {

Rational binomial(long n, long k) {
  if (k < 0) throw std::domain_error("binomial: negative lower index");
  mpz_class nn(n), r;
  mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r);
}

BernoulliTable::BernoulliTable(int max_index) {
  if (max_index < 0) throw std::domain_error("BernoulliTable: negative max index");
  b_.reserve(static_cast<std::size_t>(max_index) + 1);
  b_.push_back(Rational(1));
  for (int k = 1; k <= max_index; ++k) {
    // sum_{j=0}^{k} C(k+1,j) B_j = 0  =>  B_k = -(1/C(k+1,k)) sum_{j<k} C(k+1,j) B_j
    Rational acc(0);
    for (int j = 0; j < k; ++j) acc += binomial(k + 1, j) * b_[static_cast<std::size_t>(j)];
    b_.push_back(-acc / binomial(k + 1, k));
  }
}

RationalPolynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t k = points.size();
  if (k == 0) throw std::domain_error("lagrange_interpolate: no points");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (points[i].first == points[j].first) {
        throw std::domain_error("lagrange_interpolate: duplicate abscissa " + points[i].first.str());
      }
    }
  }
  // Divided differences: coef[i] = f[x_0..x_i].
  std::vector<Rational> coef(k);
  for (std::size_t i = 0; i < k; ++i) coef[i] = points[i].second;
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  // Horner over the nodes: p = (...(c_{k-1}(x - x_{k-2}) + c_{k-2})...)(x - x_0) + c_0.
  RationalPolynomial p = RationalPolynomial::constant(coef[k - 1]);
  for (std::size_t i = k - 1; i-- > 0;) {
    const RationalPolynomial lin(
        std::vector<Rational>{-points[i].first, Rational(1)});
    p = p * lin + RationalPolynomial::constant(coef[i]);
  }
  return p;
}

Rational hessenberg_determinant(const std::vector<std::vector<Rational>>& matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::domain_error("hessenberg_determinant: matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (!matrix[i][j].is_zero()) {
        throw std::domain_error("hessenberg_determinant: nonzero entry above the superdiagonal");
      }
    }
  }
  std::vector<Rational> d(n + 1);
  d[0] = Rational(1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    Rational superprod(1);  // prod of a_{j,j+1} for j = i..k-1 (1-indexed), built descending
    for (std::size_t i = k; i >= 1; --i) {
      const Rational term = matrix[k - 1][i - 1] * superprod * d[i - 1];
      if ((k - i) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
      if (i >= 2) superprod *= matrix[i - 2][i - 1];
    }
    d[k] = acc;
  }
  return d[n];
}

IntegerRootFactorization integer_root_factorization(const RationalPolynomial& p, long search_bound) {
  IntegerRootFactorization out;
  out.remainder = p;
  if (p.is_zero() || p.degree() == 0) return out;
  const long bound = search_bound < 0 ? 0 : search_bound;
  for (long r = -bound; r <= bound; ++r) {
    if (out.remainder.degree() < 1) break;
    const RationalPolynomial lin(std::vector<Rational>{Rational(-r), Rational(1)});
    while (out.remainder.degree() >= 1 && out.remainder(Rational(r)).is_zero()) {
      const PolyDivMod d = divmod(out.remainder, lin);
      assert(d.remainder.is_zero());
      out.remainder = d.quotient;
      out.roots.push_back(r);
    }
  }
  return out;
}

namespace {

// Writes p as scale * P with P a primitive integer polynomial having a
// positive leading coefficient; returns {scale, P}. p must be nonzero.
std::pair<Rational, RationalPolynomial> primitive_part(const RationalPolynomial& p) {
  mpz_class lcm_den(1);
  for (const Rational& c : p.coeffs()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    lcm_den = l;
  }
  mpz_class content(0);
  for (const Rational& c : p.coeffs()) {
    const mpz_class scaled = c.num() * (lcm_den / c.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    content = g;
  }
  if (p.leading().sign() < 0) content = -content;
  const Rational scale(content, lcm_den);
  std::vector<Rational> prim;
  prim.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) prim.push_back(c / scale);
  return {scale, RationalPolynomial(std::move(prim))};
}

}  // namespace

std::string factored_string(const RationalPolynomial& p, long search_bound) {
  if (p.is_zero()) return "0";
  if (p.degree() == 0) return p.coeff(0).str();
  const IntegerRootFactorization irf = integer_root_factorization(p, search_bound);
  const auto [scale, cofactor] = primitive_part(irf.remainder);

  std::ostringstream os;
  if (scale.sign() < 0) os << '-';
  const mpz_class num = abs(scale.num());
  const bool have_factors = !irf.roots.empty() || cofactor.degree() >= 1;
  if (num != 1 || !have_factors) os << num.get_str();
  for (std::size_t i = 0; i < irf.roots.size();) {
    const long r = irf.roots[i];
    std::size_t mult = 1;
    while (i + mult < irf.roots.size() && irf.roots[i + mult] == r) ++mult;
    if (r == 0) {
      os << 'n';
    } else if (r > 0) {
      os << "(n-" << r << ')';
    } else {
      os << "(n+" << -r << ')';
    }
    if (mult >= 2) os << '^' << mult;
    i += mult;
  }
  if (cofactor.degree() >= 1) os << '(' << cofactor.str("n") << ')';
  if (scale.den() != 1) os << '/' << scale.den().get_str();
  return os.str();
}

}  // namespace qzeta
