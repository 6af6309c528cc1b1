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

#include "qzeta/rational.hpp"

#include <cctype>
#include <ostream>

namespace qzeta {

namespace {

// Accepts ^-?[0-9]+(/[0-9]+)?$ only; GMP's own parser is laxer (it skips
// whitespace), which would let malformed CLI input slip through.
bool valid_rational_text(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i == text.size()) return true;
  if (text[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  return digits > 0 && i == text.size();
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
  if (!valid_rational_text(text)) {
    throw std::domain_error("Rational: cannot parse \"" + text + "\"");
  }
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(mpz_class(text));
  }
  const mpz_class num(text.substr(0, slash));
  const mpz_class den(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("Rational: zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("Rational: zero to a negative power");
    return inverse().pow(-exponent);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);  // num/den already coprime, so n/d is too
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace qzeta
