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

#ifndef QZETA_DISCOVER_HPP_
#define QZETA_DISCOVER_HPP_

#include <string>
#include <vector>

#include "qzeta/exact_arith.hpp"
#include "qzeta/polynomial.hpp"
#include "qzeta/qmzv.hpp"

#include "json.hpp"

namespace qzeta {

/// Which rational-valued family of an index to interpolate over n.
enum class DiscoveryMode { kFullValue, kRealPart, kSymmetricPair };

std::string to_string(DiscoveryMode mode);

/**
 * Outcome of closed-form discovery: the interpolated polynomial in n, its
 * integer-root factorization, and whether held-out points confirmed it.
 */
struct DiscoveryResult {
  Composition index;
  bool star = false;
  DiscoveryMode mode = DiscoveryMode::kFullValue;
  RationalPolynomial polynomial;
  std::vector<long> integer_roots;
  RationalPolynomial remainder;
  int certified_degree = -1;
  bool holdout_verified = false;
  std::string factored;

  nlohmann::json to_json() const;
};

/**
 * Samples the family at n = 1..n_sample_max (0 picks weight+4), interpolates
 * exactly, then re-checks at the next n_holdout points. A holdout mismatch
 * yields holdout_verified = false, not an exception; an irrational sample
 * raises NotRationalError with a diagnostic naming the sample point.
 */
DiscoveryResult discover(const Composition& index, bool star, DiscoveryMode mode,
                         long n_sample_max = 0, int n_holdout = 3);

}  // namespace qzeta

#endif  // QZETA_DISCOVER_HPP_
