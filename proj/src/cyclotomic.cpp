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

#include "qzeta/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace qzeta {

namespace {

thread_local std::uint64_t element_mul_count = 0;

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, RationalPolynomial>& phi_cache() {
  static std::map<int, RationalPolynomial> c;
  return c;
}

std::mutex& context_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, CycloContextPtr>& context_cache() {
  static std::map<int, CycloContextPtr> c;
  return c;
}

}  // namespace

RationalPolynomial cyclotomic_polynomial(int order) {
  if (order < 1) throw std::domain_error("cyclotomic_polynomial: order must be >= 1");
  {
    std::lock_guard<std::mutex> lock(phi_mutex());
    const auto it = phi_cache().find(order);
    if (it != phi_cache().end()) return it->second;
  }
  RationalPolynomial phi;
  if (order == 1) {
    phi = RationalPolynomial(std::vector<Rational>{Rational(-1), Rational(1)});  // x - 1
  } else {
    std::vector<Rational> xn1(static_cast<std::size_t>(order) + 1, Rational(0));
    xn1[0] = Rational(-1);
    xn1.back() = Rational(1);
    RationalPolynomial q{std::move(xn1)};  // x^order - 1
    for (int d = 1; d < order; ++d) {
      if (order % d != 0) continue;
      const PolyDivMod dm = divmod(q, cyclotomic_polynomial(d));
      assert(dm.remainder.is_zero());
      q = dm.quotient;
    }
    phi = std::move(q);
  }
  std::lock_guard<std::mutex> lock(phi_mutex());
  return phi_cache().emplace(order, std::move(phi)).first->second;
}

CycloContext::CycloContext(int order) : order_(order), phi_(cyclotomic_polynomial(order)) {
  degree_ = phi_.degree();
  // fold_[t] = x^(degree + t) mod Phi. Row 0 comes from Phi being monic;
  // each next row is the previous one shifted and re-reduced.
  const std::size_t deg = static_cast<std::size_t>(degree_);
  std::vector<Rational> row(deg, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) row[i] = -phi_.coeff(static_cast<int>(i));
  fold_.reserve(deg >= 1 ? deg - 1 : 0);
  for (int t = 0; t + 2 <= degree_; ++t) {
    fold_.push_back(row);
    std::vector<Rational> next(deg, Rational(0));
    const Rational top = row[deg - 1];
    for (std::size_t i = 1; i < deg; ++i) next[i] = row[i - 1];
    if (!top.is_zero()) {
      for (std::size_t i = 0; i < deg; ++i) next[i] += top * fold_[0][i];
    }
    row = std::move(next);
  }
  zeta_pow_.assign(static_cast<std::size_t>(order_), std::vector<Rational>(deg, Rational(0)));
  for (int k = 0; k < order_; ++k) {
    if (k < degree_) {
      zeta_pow_[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = Rational(1);
      continue;
    }
    // zeta^k = zeta^(k-1) * zeta: shift then fold the overflow coefficient.
    const auto& prev = zeta_pow_[static_cast<std::size_t>(k - 1)];
    std::vector<Rational> cur(deg, Rational(0));
    const Rational top = prev[deg - 1];
    for (std::size_t i = 1; i < deg; ++i) cur[i] = prev[i - 1];
    if (!top.is_zero()) {
      if (fold_.empty()) {
        // degree 1 field (order 2): x = -phi[0]
        cur[0] += top * (-phi_.coeff(0));
      } else {
        for (std::size_t i = 0; i < deg; ++i) cur[i] += top * fold_[0][i];
      }
    }
    zeta_pow_[static_cast<std::size_t>(k)] = std::move(cur);
  }
}

CycloContextPtr CycloContext::get(int order) {
  if (order < 2) throw std::domain_error("CycloContext: order must be >= 2");
  std::lock_guard<std::mutex> lock(context_mutex());
  auto it = context_cache().find(order);
  if (it != context_cache().end()) return it->second;
  CycloContextPtr ctx(new CycloContext(order));
  context_cache().emplace(order, ctx);
  return ctx;
}

const std::vector<Rational>& CycloContext::zeta_power(long k) const {
  long r = k % order_;
  if (r < 0) r += order_;
  return zeta_pow_[static_cast<std::size_t>(r)];
}

NotRationalError::NotRationalError(int order, std::vector<std::string> coeffs,
                                   const std::string& context)
    : std::runtime_error([&] {
        std::ostringstream os;
        if (!context.empty()) os << context << ": ";
        os << "element of Q(zeta_" << order << ") is not rational: [";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          if (i) os << ", ";
          os << coeffs[i];
        }
        os << "]";
        return os.str();
      }()),
      order_(order),
      coeffs_(std::move(coeffs)) {}

CycloElement::CycloElement(CycloContextPtr context, std::vector<Rational> coeffs)
    : ctx_(std::move(context)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw std::invalid_argument("CycloElement: null context");
  if (static_cast<int>(coeffs_.size()) != ctx_->degree()) {
    throw std::invalid_argument("CycloElement: coefficient vector length must equal the field degree");
  }
}

CycloElement CycloElement::from_rational(const CycloContextPtr& context, const Rational& value) {
  if (!context) return CycloElement(value);
  std::vector<Rational> c(static_cast<std::size_t>(context->degree()), Rational(0));
  c[0] = value;
  return CycloElement(context, std::move(c));
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Rational CycloElement::as_rational() const {
  if (!is_rational()) {
    std::vector<std::string> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c.str());
    throw NotRationalError(order(), std::move(cs));
  }
  return coeffs_[0];
}

namespace {

// Resolves the field both operands live in; lifting a contextless scalar is
// the only implicit embedding allowed.
const CycloContextPtr& common_context(const CycloElement& a, const CycloElement& b) {
  if (a.has_context() && b.has_context()) {
    if (a.order() != b.order()) {
      throw std::invalid_argument("CycloElement: mixed cyclotomic orders " +
                                  std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
    return a.context();
  }
  return a.has_context() ? a.context() : b.context();
}

std::vector<Rational> lifted_coeffs(const CycloElement& x, const CycloContextPtr& ctx) {
  if (x.has_context()) return x.coeffs();
  std::vector<Rational> c(static_cast<std::size_t>(ctx->degree()), Rational(0));
  c[0] = x.coeffs()[0];
  return c;
}

}  // namespace

CycloElement CycloElement::conjugate() const {
  if (!ctx_) return *this;
  const int n = ctx_->order();
  std::vector<Rational> out(static_cast<std::size_t>(ctx_->degree()), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const auto& zp = ctx_->zeta_power((n - static_cast<long>(j)) % n);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs_[j] * zp[i];
  }
  return CycloElement(ctx_, std::move(out));
}

CycloElement CycloElement::real_part() const { return Rational(1, 2) * (*this + conjugate()); }

Rational CycloElement::real_part_rational() const { return real_part().as_rational(); }

CycloElement CycloElement::imaginary_part() const {
  return Rational(1, 2) * (*this - conjugate());
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw std::domain_error("CycloElement: division by zero");
  if (!ctx_) return CycloElement(coeffs_[0].inverse());
  const RationalPolynomial rep{std::vector<Rational>(coeffs_)};
  const PolyExtGcd eg = extended_gcd(rep, ctx_->modulus());
  // Phi_N is irreducible and rep != 0 mod Phi_N, so the monic gcd is 1.
  assert(eg.g.degree() == 0 && eg.g.coeff(0) == Rational(1));
  const RationalPolynomial inv = divmod(eg.s, ctx_->modulus()).remainder;
  std::vector<Rational> out(static_cast<std::size_t>(ctx_->degree()), Rational(0));
  for (int i = 0; i <= inv.degree(); ++i) out[static_cast<std::size_t>(i)] = inv.coeff(i);
  return CycloElement(ctx_, std::move(out));
}

CycloElement CycloElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycloElement acc = ctx_ ? one(ctx_) : CycloElement(Rational(1));
  CycloElement base = *this;
  // Iterated multiplication; exponents here are tiny (composition parts).
  for (long i = 0; i < exponent; ++i) acc = acc * base;
  return acc;
}

CycloElement CycloElement::operator-() const {
  CycloElement r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
  if (!a.has_context() && !b.has_context()) {
    return CycloElement(a.coeffs_[0] + b.coeffs_[0]);
  }
  const CycloContextPtr& ctx = common_context(a, b);
  std::vector<Rational> out = lifted_coeffs(a, ctx);
  const std::vector<Rational> bc = lifted_coeffs(b, ctx);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += bc[i];
  return CycloElement(ctx, std::move(out));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
  if (!a.has_context() && !b.has_context()) {
    return CycloElement(a.coeffs_[0] - b.coeffs_[0]);
  }
  const CycloContextPtr& ctx = common_context(a, b);
  std::vector<Rational> out = lifted_coeffs(a, ctx);
  const std::vector<Rational> bc = lifted_coeffs(b, ctx);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= bc[i];
  return CycloElement(ctx, std::move(out));
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  ++element_mul_count;
  if (!a.has_context() && !b.has_context()) {
    return CycloElement(a.coeffs_[0] * b.coeffs_[0]);
  }
  const CycloContextPtr& ctx = common_context(a, b);
  const std::vector<Rational> ac = lifted_coeffs(a, ctx);
  const std::vector<Rational> bc = lifted_coeffs(b, ctx);
  const std::size_t deg = ac.size();
  std::vector<Rational> conv(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j) conv[i + j] += ac[i] * bc[j];
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + static_cast<long>(deg));
  for (std::size_t t = deg; t < conv.size(); ++t) {
    if (conv[t].is_zero()) continue;
    const auto& row = ctx->fold_row(static_cast<int>(t - deg));
    for (std::size_t i = 0; i < deg; ++i) out[i] += conv[t] * row[i];
  }
  return CycloElement(ctx, std::move(out));
}

CycloElement operator*(const Rational& s, const CycloElement& x) {
  CycloElement r(x);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  if (a.order() != b.order()) return false;
  return a.coeffs_ == b.coeffs_;
}

std::string CycloElement::str() const {
  return RationalPolynomial(std::vector<Rational>(coeffs_)).str("z");
}

nlohmann::json CycloElement::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(c.str());
  return nlohmann::json{{"order", order()}, {"coeffs", std::move(coeffs)}};
}

CycloElement root_power(const CycloContextPtr& context, long k) {
  if (!context) throw std::invalid_argument("root_power: null context");
  return CycloElement(context, context->zeta_power(k));
}

std::uint64_t element_multiplications() { return element_mul_count; }

void reset_element_multiplications() { element_mul_count = 0; }

}  // namespace qzeta
