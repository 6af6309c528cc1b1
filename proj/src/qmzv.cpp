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

#include "qzeta/qmzv.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qzeta {

Composition::Composition(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Composition: needs at least one part");
  for (long p : parts_) {
    if (p < 1) throw std::invalid_argument("Composition: every part must be >= 1");
  }
}

Composition Composition::all_ones(int m) {
  if (m < 1) throw std::invalid_argument("Composition: depth must be >= 1");
  return Composition(std::vector<long>(static_cast<std::size_t>(m), 1));
}

Composition Composition::one_two_one(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("Composition: negative block length");
  std::vector<long> parts(static_cast<std::size_t>(a), 1);
  parts.push_back(2);
  parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
  return Composition(std::move(parts));
}

Composition Composition::parse(const std::string& text) {
  std::vector<long> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    const std::string token =
        text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("Composition: bad part '" + token + "' in '" + text + "'");
    }
    parts.push_back(std::stol(token));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return Composition(std::move(parts));
}

long Composition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Composition::max_part() const {
  return *std::max_element(parts_.begin(), parts_.end());
}

Composition Composition::reversed() const {
  return Composition(std::vector<long>(parts_.rbegin(), parts_.rend()));
}

bool Composition::is_palindrome() const {
  return std::equal(parts_.begin(), parts_.end(), parts_.rbegin());
}

std::string Composition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Composition reverse(const Composition& index) { return index.reversed(); }

CycloElement u(const CycloContextPtr& ctx, long r) {
  if (!ctx) throw std::invalid_argument("u: null context");
  long rem = r % ctx->order();
  if (rem < 0) rem += ctx->order();
  if (rem == 0) throw std::domain_error("u: 1 - zeta^r vanishes at r = 0 mod order");
  return (CycloElement::one(ctx) - root_power(ctx, rem)).inverse();
}

namespace {

// Powers base^1..base^max_exp by iterated multiplication.
std::vector<CycloElement> power_table(const CycloElement& base, long max_exp) {
  std::vector<CycloElement> pow;
  pow.reserve(static_cast<std::size_t>(max_exp));
  pow.push_back(base);
  for (long k = 2; k <= max_exp; ++k) pow.push_back(pow.back() * base);
  return pow;
}

}  // namespace

ZetaValue evaluate(long n, long q_order, const Composition& index, bool star,
                   long root_exponent) {
  if (n < 1) throw std::domain_error("evaluate: n must be >= 1");
  const int m = index.depth();
  const bool empty_range = star ? (n <= 1) : (n <= m);
  if (empty_range) {
    return ZetaValue{CycloElement(Rational(0)), n, q_order, index, star};
  }
  if (q_order < n) {
    throw std::domain_error("evaluate: q_order must be >= n for a nonempty range");
  }
  const CycloContextPtr ctx = CycloContext::get(static_cast<int>(q_order));
  const long max_s = index.max_part();
  const auto& s = index.parts();

  // Prefix DP: A_j = sum over admissible j-tuples ending at or before i.
  std::vector<CycloElement> a(static_cast<std::size_t>(m) + 1, CycloElement::zero(ctx));
  a[0] = CycloElement::one(ctx);
  for (long i = 1; i <= n - 1; ++i) {
    const std::vector<CycloElement> upow = power_table(u(ctx, root_exponent * i), max_s);
    if (star) {
      // Ascending j reads the current row, admitting i_j = i_{j-1}.
      for (int j = 1; j <= m; ++j) {
        a[static_cast<std::size_t>(j)] +=
            a[static_cast<std::size_t>(j - 1)] * upow[static_cast<std::size_t>(s[j - 1] - 1)];
      }
    } else {
      // Descending j reads pre-update values, forcing i_j > i_{j-1}.
      for (int j = static_cast<int>(std::min<long>(i, m)); j >= 1; --j) {
        a[static_cast<std::size_t>(j)] +=
            a[static_cast<std::size_t>(j - 1)] * upow[static_cast<std::size_t>(s[j - 1] - 1)];
      }
    }
  }
  return ZetaValue{a[static_cast<std::size_t>(m)], n, q_order, index, star};
}

ZetaValue evaluate(long n, const Composition& index, bool star) {
  return evaluate(n, n, index, star);
}

CycloElement evaluate_t(long n, int m) {
  if (n < 1) throw std::domain_error("evaluate_t: n must be >= 1");
  if (m < 0) throw std::domain_error("evaluate_t: m must be >= 0");
  if (m == 0) return CycloElement(Rational(1));  // empty product
  if (n < m) return CycloElement(Rational(0));   // empty sum
  const long order = (static_cast<long>(m) + 1) * n;
  const CycloContextPtr ctx = CycloContext::get(static_cast<int>(order));
  std::vector<CycloElement> a(static_cast<std::size_t>(m) + 1, CycloElement::zero(ctx));
  a[0] = CycloElement::one(ctx);
  for (long i = 1; i <= n; ++i) {
    for (int j = static_cast<int>(std::min<long>(i, m)); j >= 1; --j) {
      const long e = (static_cast<long>(m) + 1) * i - j;
      // e = -j mod (m+1) with 1 <= j <= m, so e never vanishes mod (m+1)n.
      assert(e % order != 0);
      a[static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(j - 1)] * u(ctx, e);
    }
  }
  return a[static_cast<std::size_t>(m)];
}

}  // namespace qzeta
