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

#include "qzeta/discover.hpp"

#include <stdexcept>

namespace qzeta {

std::string to_string(DiscoveryMode mode) {
  switch (mode) {
    case DiscoveryMode::kFullValue:
      return "full-value";
    case DiscoveryMode::kRealPart:
      return "real-part";
    case DiscoveryMode::kSymmetricPair:
      return "symmetric-pair";
  }
  throw std::logic_error("to_string: bad DiscoveryMode");
}

namespace {

nlohmann::json poly_json(const RationalPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).str());
  return nlohmann::json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

Rational sample(const Composition& index, bool star, DiscoveryMode mode, long n) {
  try {
    switch (mode) {
      case DiscoveryMode::kFullValue:
        return evaluate(n, index, star).value.as_rational();
      case DiscoveryMode::kRealPart:
        return evaluate(n, index, star).value.real_part_rational();
      case DiscoveryMode::kSymmetricPair:
        return (evaluate(n, index, star).value + evaluate(n, index.reversed(), star).value)
            .as_rational();
    }
  } catch (const NotRationalError& e) {
    throw NotRationalError(e.order(), e.coeffs(),
                           "discover: " + to_string(mode) + " sample of (" + index.str() +
                               ") at n=" + std::to_string(n));
  }
  throw std::logic_error("sample: bad DiscoveryMode");
}

}  // namespace

DiscoveryResult discover(const Composition& index, bool star, DiscoveryMode mode,
                         long n_sample_max, int n_holdout) {
  if (n_sample_max <= 0) n_sample_max = index.weight() + 4;
  if (n_sample_max < 2) n_sample_max = 2;
  if (n_holdout < 0) throw std::invalid_argument("discover: n_holdout must be >= 0");

  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(static_cast<std::size_t>(n_sample_max));
  for (long n = 1; n <= n_sample_max; ++n) {
    points.emplace_back(Rational(n), sample(index, star, mode, n));
  }

  DiscoveryResult result{index, star, mode, {}, {}, {}, -1, false, {}};
  result.polynomial = lagrange_interpolate(points);
  result.certified_degree = result.polynomial.degree();

  const IntegerRootFactorization fact = integer_root_factorization(result.polynomial, 100);
  result.integer_roots = fact.roots;
  result.remainder = fact.remainder;
  result.factored = factored_string(result.polynomial);

  result.holdout_verified = true;
  for (long n = n_sample_max + 1; n <= n_sample_max + n_holdout; ++n) {
    if (result.polynomial(Rational(n)) != sample(index, star, mode, n)) {
      result.holdout_verified = false;
      break;
    }
  }
  return result;
}

nlohmann::json DiscoveryResult::to_json() const {
  nlohmann::json roots = nlohmann::json::array();
  for (long r : integer_roots) roots.push_back(r);
  return nlohmann::json{{"index", index.str()},
                        {"star", star},
                        {"mode", to_string(mode)},
                        {"polynomial", poly_json(polynomial)},
                        {"integer_roots", std::move(roots)},
                        {"remainder", poly_json(remainder)},
                        {"certified_degree", certified_degree},
                        {"holdout_verified", holdout_verified},
                        {"factored", factored}};
}

}  // namespace qzeta
