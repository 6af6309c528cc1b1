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

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "qzeta/closed_forms.hpp"

namespace qzeta {
namespace {

TEST_SUITE("closed_forms") {

TEST_CASE("catalog is complete ordered and self-describing") {
  const std::vector<Identity>& cat = catalog();
  REQUIRE(cat.size() == 15);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(cat[i].id == "C" + std::to_string(i + 1));
    CHECK_FALSE(cat[i].description.empty());
    CHECK(bool(cat[i].in_domain));
    CHECK(bool(cat[i].default_grid));
    CHECK(bool(cat[i].check));
  }
  CHECK(find_identity("C3") == &cat[2]);
  CHECK(find_identity("C16") == nullptr);
  CHECK(find_identity("") == nullptr);
}

TEST_CASE("default grids respect the clips and stay in domain") {
  for (const Identity& identity : catalog()) {
    const std::vector<Point> grid = identity.default_grid(12, 3);
    for (const Point& p : grid) {
      CAPTURE(identity.id);
      REQUIRE_FALSE(p.empty());
      CHECK(p[0] <= 12);
      CHECK(identity.in_domain(p));
    }
    // Degenerate clips never produce out-of-domain points either.
    for (const Point& p : identity.default_grid(2, 1)) {
      CHECK(identity.in_domain(p));
    }
  }
}

TEST_CASE("run_identity rejects out-of-domain points") {
  const Identity* c2 = find_identity("C2");
  REQUIRE(c2 != nullptr);
  CHECK_FALSE(c2->in_domain(Point{5, 1}));   // exponent below the table
  CHECK_FALSE(c2->in_domain(Point{5, 10}));  // exponent above the table
  CHECK_FALSE(c2->in_domain(Point{0, 2}));   // n below 1
  CHECK_THROWS_AS(run_identity(*c2, {Point{5, 1}}), std::domain_error);
}

TEST_CASE("reports carry counts and timing") {
  VerificationReport r = verify("C2", {Point{5, 2}, Point{6, 2}, Point{7, 3}});
  CHECK(r.id == "C2");
  CHECK(r.points_tested == 3);
  CHECK(r.pass());
  CHECK(r.ms >= 0);
  CHECK_THROWS_AS(verify("nope", {Point{5, 2}}), std::invalid_argument);
}

TEST_CASE("failures surface exact witnesses") {
  // A deliberately wrong catalog-shaped identity exercises the failure path.
  Identity bogus;
  bogus.id = "X1";
  bogus.description = "intentionally false";
  bogus.kind = IdentityKind::kRationalEquality;
  bogus.in_domain = [](const Point& p) { return p.size() == 1 && p[0] >= 2; };
  bogus.default_grid = [](long, int) { return std::vector<Point>{}; };
  bogus.check = [](const Point& p) -> std::optional<Failure> {
    const Rational lhs(p[0]);
    const Rational rhs(p[0] + 1);
    if (lhs == rhs) return std::nullopt;
    return Failure{p, lhs.str(), rhs.str()};
  };
  VerificationReport r = run_identity(bogus, {Point{2}, Point{3}});
  CHECK_FALSE(r.pass());
  CHECK(r.points_tested == 2);
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0].point == Point{2});
  CHECK(r.failures[0].lhs == "2");
  CHECK(r.failures[0].rhs == "3");

  nlohmann::json j = r.to_json();
  CHECK(j["id"] == "X1");
  CHECK(j["pass"] == false);
  CHECK(j["points_tested"] == 2);
  CHECK(j["failures"].size() == 2);
  CHECK(j["failures"][0]["lhs"] == "2");
  CHECK(j["failures"][0]["point"] == nlohmann::json::array({2}));
}

TEST_CASE("json report shape on success") {
  nlohmann::json j = verify("C10", {Point{5}, Point{9}}).to_json();
  CHECK(j["id"] == "C10");
  CHECK(j["pass"] == true);
  CHECK(j["points_tested"] == 2);
  CHECK(j["failures"].empty());
  CHECK(j.contains("ms"));
}

TEST_CASE("spot checks across the catalog") {
  // Depth-one closed forms at hand-computable points.
  CHECK(verify("C1", {Point{5, 1}, Point{5, 2}, Point{9, 3}}).pass());
  CHECK(verify("C2", {Point{7, 2}, Point{5, 2}, Point{6, 4}}).pass());
  CHECK(verify("C3", {Point{6, 2}, Point{8, 3}}).pass());
  CHECK(verify("C4", {Point{7, 2, 0}, Point{7, 2, 1}, Point{9, 3, 2}}).pass());
  CHECK(verify("C5", {Point{7, 2, 0}, Point{9, 3, 1}}).pass());
  CHECK(verify("C7", {Point{6, 2, 3}, Point{8, 1, 1}}).pass());
  CHECK(verify("C10", {Point{4}, Point{11}}).pass());
  CHECK(verify("C11", {Point{4}, Point{11}}).pass());
  CHECK(verify("C12", {Point{5, 3}, Point{3, 6}, Point{12, 6}}).pass());
  CHECK(verify("C13", {Point{4, 1}, Point{9, 5}}).pass());
  CHECK(verify("C14", {Point{4, 2}, Point{6, 3}}).pass());
  CHECK(verify("C15", {Point{4}, Point{7}}).pass());
}

TEST_CASE("verify_default covers a small sweep") {
  CHECK(verify_default("C2", 10, 6).pass());
  CHECK(verify_default("C7", 8, 2).pass());
  CHECK(verify_default("C13", 9, 6).pass());
  VerificationReport r = verify_default("C10", 8, 3);
  CHECK(r.pass());
  CHECK(r.points_tested == 6);  // n = 3..8, unclipped by depth
  CHECK_THROWS_AS(verify_default("C99", 10, 3), std::invalid_argument);
}

TEST_CASE("verify_all runs the whole catalog deterministically") {
  const std::vector<VerificationReport> seq = verify_all(8, 3, 1);
  REQUIRE(seq.size() == 15);
  std::set<std::string> ids;
  for (const VerificationReport& r : seq) {
    CAPTURE(r.id);
    CHECK(r.pass());
    ids.insert(r.id);
  }
  CHECK(ids.size() == 15);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].id == catalog()[i].id);
  }

  // Same grids and order regardless of thread count.
  const std::vector<VerificationReport> par = verify_all(8, 3, 4);
  REQUIRE(par.size() == seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(par[i].id == seq[i].id);
    CHECK(par[i].points_tested == seq[i].points_tested);
    CHECK(par[i].pass() == seq[i].pass());
  }

  // Edge clips stay well-defined (grids may be empty, runs still report).
  const std::vector<VerificationReport> tiny = verify_all(2, 1, 1);
  REQUIRE(tiny.size() == 15);
  for (const VerificationReport& r : tiny) CHECK(r.pass());

  CHECK_THROWS_AS(verify_all(1, 3, 1), std::domain_error);
  CHECK_THROWS_AS(verify_all(8, 3, 0), std::invalid_argument);
}

TEST_CASE("discovery targets restate catalog rows") {
  const std::vector<DiscoveryTarget> targets = discovery_targets();
  REQUIRE(targets.size() == 21);  // 8 single-exponent, 5 pair sums, 8 star rows
  std::set<std::string> ids;
  for (const DiscoveryTarget& t : targets) {
    CHECK_FALSE(t.canonical.empty());
    ids.insert(t.id);
  }
  CHECK(ids.size() == 21);
  CHECK(targets[0].id == "C2:s=2");
  CHECK(targets[0].mode == DiscoveryMode::kFullValue);
  CHECK(targets[0].canonical == "-(n-1)(n-5)/12");
  CHECK(targets[8].id == "C12:k=3");
  CHECK(targets[8].mode == DiscoveryMode::kSymmetricPair);
}

}  // TEST_SUITE

}  // namespace
}  // namespace qzeta
