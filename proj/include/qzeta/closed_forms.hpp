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

#ifndef QZETA_CLOSED_FORMS_HPP_
#define QZETA_CLOSED_FORMS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qzeta/discover.hpp"
#include "qzeta/polynomial.hpp"
#include "qzeta/qmzv.hpp"

#include "json.hpp"

namespace qzeta {

/// A parameter tuple for one identity check; point[0] is always n, the
/// remaining entries are identity-specific (exponent, depth, split, ...).
using Point = std::vector<long>;

enum class IdentityKind { kRationalEquality, kRealPartEquality, kElementEquality };

struct Failure {
  Point point;
  std::string lhs;
  std::string rhs;
};

/**
 * One catalog entry: a closed-form identity with its admissible parameter
 * domain, a desk-scale default grid, and an exact checker that returns a
 * witness on mismatch (never a bare boolean).
 */
struct Identity {
  std::string id;
  std::string description;
  IdentityKind kind;
  std::function<bool(const Point&)> in_domain;
  std::function<std::vector<Point>(long n_max, int depth_max)> default_grid;
  std::function<std::optional<Failure>(const Point&)> check;
};

struct VerificationReport {
  std::string id;
  long points_tested = 0;
  std::vector<Failure> failures;
  long ms = 0;

  bool pass() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// The complete, immutable identity catalog, ordered C1..C15.
const std::vector<Identity>& catalog();

/// Catalog lookup; nullptr when the id is unknown.
const Identity* find_identity(const std::string& id);

/// Checks one identity at explicit points; out-of-domain points throw.
VerificationReport run_identity(const Identity& identity, const std::vector<Point>& points);

/// Checks a known id at explicit points; unknown id throws invalid_argument.
VerificationReport verify(const std::string& id, const std::vector<Point>& points);

/// Checks a known id over its default grid clipped to n_max / depth_max.
VerificationReport verify_default(const std::string& id, long n_max, int depth_max);

/// Runs the whole catalog over clipped default grids, deterministically
/// ordered by id; parallelism > 1 fans identities out over worker threads.
std::vector<VerificationReport> verify_all(long n_max, int depth_max, int parallelism = 1);

/// A catalog entry restated as a discovery problem with its expected
/// factored form, used for blind re-derivation checks.
struct DiscoveryTarget {
  std::string id;
  Composition index;
  bool star;
  DiscoveryMode mode;
  std::string canonical;  // factored form of the catalog polynomial
};

/// Re-discovery targets covering the single-exponent table, the (2,k) pair
/// sums, and the star identities.
std::vector<DiscoveryTarget> discovery_targets();

}  // namespace qzeta

#endif  // QZETA_CLOSED_FORMS_HPP_
