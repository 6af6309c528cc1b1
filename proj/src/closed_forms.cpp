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

#include "qzeta/closed_forms.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qzeta/exact_arith.hpp"

namespace qzeta {

namespace {

RationalPolynomial P(std::initializer_list<long> low_first) {
  std::vector<Rational> c;
  c.reserve(low_first.size());
  for (long v : low_first) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial linear(long root) { return P({-root, 1}); }

RationalPolynomial c2_poly(long s) {
  switch (s) {
    case 2:
      return Rational(-1, 12) * (linear(1) * linear(5));
    case 3:
      return Rational(-1, 8) * (linear(1) * linear(3));
    case 4:
      return Rational(1, 720) * (linear(1) * P({251, -109, 1, 1}));
    case 5:
      return Rational(1, 288) * (linear(1) * linear(5) * P({-19, 6, 1}));
    case 6:
      return Rational(-1, 60480) * (linear(1) * P({-19087, 11153, -355, -355, 2, 2}));
    case 7:
      return Rational(-1, 17280) * (linear(1) * linear(7) * P({751, -376, -33, 16, 2}));
    case 8:
      return Rational(1, 3628800) *
             (linear(1) * P({1070017, -744383, 39697, 39697, -917, -917, 3, 3}));
    case 9:
      return Rational(27, 7257600) *
             (linear(1) * linear(3) * linear(9) * P({2857, -851, -350, 10, 13, 1}));
    default:
      throw std::domain_error("c2_poly: s must be 2..9");
  }
}

RationalPolynomial c12_poly(long k) {
  switch (k) {
    case 3:
      return Rational(1, 144) * (linear(1) * linear(2) * linear(5) * linear(7));
    case 4:
      return Rational(-1, 60480) * (linear(1) * linear(2) * P({-13936, 5787, -469, -27, 5}));
    case 5:
      return Rational(-1, 5760) * (linear(1) * linear(2) * linear(3) * P({424, -61, -4, 1}));
    case 6:
      return Rational(1, 3628800) *
             (linear(1) * linear(2) * P({773596, -411111, 33743, 7950, -946, -39, 7}));
    case 7:
      return Rational(1, 7257600) *
             (linear(1) * linear(2) * P({1501364, -870339, 73587, 23910, -2514, -291, 43}));
    default:
      throw std::domain_error("c12_poly: k must be 3..7");
  }
}

struct StarEntry {
  Composition index;
  bool pair_sum;  // false: the single value is already rational
  RationalPolynomial poly;
};

const std::vector<StarEntry>& c13_entries() {
  static const std::vector<StarEntry> entries = [] {
    std::vector<StarEntry> e;
    e.push_back({Composition({1, 2}), true,
                 Rational(-1, 24) * (linear(-1) * linear(1) * linear(4))});
    e.push_back({Composition({1, 1, 2}), true,
                 Rational(-1, 720) * (linear(-1) * linear(1) * P({-64, 15, 1}))});
    e.push_back({Composition({1, 2, 1}), false,
                 Rational(-1, 240) * (linear(-1) * linear(1) * linear(-3) * linear(3))});
    e.push_back({Composition({1, 1, 1, 2}), true,
                 Rational(1, 1440) * (linear(-1) * linear(1) * linear(-4) * linear(3) * linear(7))});
    e.push_back({Composition({1, 1, 2, 1}), true,
                 Rational(-1, 144) * (linear(-1) * linear(1) * P({-7, 0, 1}))});
    e.push_back({Composition({1, 1, 1, 1, 2}), true,
                 Rational(1, 60480) * (linear(-1) * linear(1) * P({2564, -567, -334, 63, 2}))});
    e.push_back({Composition({1, 1, 1, 2, 1}), true,
                 Rational(1, 20160) * (linear(-1) * linear(1) * P({710, 0, -137, 0, 3}))});
    e.push_back({Composition({1, 1, 2, 1, 1}), false,
                 Rational(1, 60480) * (linear(-1) * linear(1) * P({1051, 0, -188, 0, 1}))});
    return e;
  }();
  return entries;
}

Rational c4_rhs(long n, long m) {
  return Rational(-1) * factorial(m) * Rational(n - 2 * m - 3) / factorial(m + 2) *
         binomial(n - 1, m);
}

std::optional<Failure> expect(const Point& pt, const CycloElement& lhs, const CycloElement& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Failure{pt, lhs.str(), rhs.str()};
}

std::optional<Failure> expect(const Point& pt, const CycloElement& lhs, const Rational& rhs) {
  return expect(pt, lhs, CycloElement(rhs));
}

CycloElement zeta_el(long n, const Composition& s, bool star = false) {
  return evaluate(n, s, star).value;
}

// All orderings of the index positions (repeated values stay distinct).
std::vector<std::vector<int>> orderings(int m) {
  std::vector<int> base(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) base[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<std::vector<Rational>> hessenberg_matrix(long n, long s) {
  std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(s),
                                         std::vector<Rational>(static_cast<std::size_t>(s)));
  for (long i = 1; i <= s; ++i) {
    for (long j = 1; j <= s; ++j) {
      Rational& a = mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (j == i + 1) {
        a = Rational(1);
      } else if (j == 1) {
        a = Rational(i, i + 1) * binomial(n - 1, i);
      } else if (j <= i) {
        a = binomial(n - 1, i - j + 1) / Rational(i - j + 2);
      }
    }
  }
  return mat;
}

long clip(long a, long b) { return std::min(a, b); }

}  // namespace

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> entries = [] {
    std::vector<Identity> cat;

    cat.push_back(Identity{
        "C1",
        "all-ones value Z_n(1^m) = C(n-1,m)/(m+1)",
        IdentityKind::kRationalEquality,
        [](const Point& p) { return p.size() == 2 && p[0] >= 1 && p[1] >= 1; },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          for (long n = 2; n <= clip(30, n_max); ++n)
            for (long m = 1; m <= clip(6, depth_max); ++m) g.push_back({n, m});
          return g;
        },
        [](const Point& p) {
          const long n = p[0], m = p[1];
          return expect(p, zeta_el(n, Composition::all_ones(static_cast<int>(m))),
                        binomial(n - 1, m) / Rational(m + 1));
        }});

    cat.push_back(Identity{
        "C2",
        "single-exponent values Z_n(s) for s = 2..9 as factored polynomials in n",
        IdentityKind::kRationalEquality,
        [](const Point& p) { return p.size() == 2 && p[0] >= 1 && p[1] >= 2 && p[1] <= 9; },
        [](long n_max, int) {
          std::vector<Point> g;
          for (long n = 2; n <= clip(25, n_max); ++n)
            for (long s = 2; s <= 9; ++s) g.push_back({n, s});
          return g;
        },
        [](const Point& p) {
          const long n = p[0], s = p[1];
          return expect(p, zeta_el(n, Composition({s})), c2_poly(s)(Rational(n)));
        }});

    cat.push_back(Identity{
        "C3",
        "Z_n(s) as an s x s lower-Hessenberg determinant of binomial entries",
        IdentityKind::kRationalEquality,
        [](const Point& p) { return p.size() == 2 && p[0] >= 2 && p[1] >= 2 && p[1] <= 9; },
        [](long n_max, int) {
          std::vector<Point> g;
          for (long s = 2; s <= 9; ++s)
            for (long n = 2; n <= clip(15, n_max); ++n) g.push_back({n, s});
          return g;
        },
        [](const Point& p) {
          const long n = p[0], s = p[1];
          const Rational det = hessenberg_determinant(hessenberg_matrix(n, s));
          return expect(p, zeta_el(n, Composition({s})), det);
        }});

    cat.push_back(Identity{
        "C4",
        "pair sum Z(1^a,2,1^b) + Z(1^b,2,1^a) = -m!(n-2m-3)/(m+2)! C(n-1,m)",
        IdentityKind::kRationalEquality,
        [](const Point& p) {
          return p.size() == 3 && p[0] >= 1 && p[1] >= 1 && p[2] >= 0 && p[2] < p[1];
        },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          for (long m = 1; m <= clip(5, depth_max); ++m)
            for (long a = 0; a < m; ++a)
              for (long n = 2; n <= clip(15, n_max); ++n) g.push_back({n, m, a});
          return g;
        },
        [](const Point& p) {
          const long n = p[0], m = p[1], a = p[2], b = m - 1 - a;
          const Composition s = Composition::one_two_one(static_cast<int>(a), static_cast<int>(b));
          return expect(p, zeta_el(n, s) + zeta_el(n, s.reversed()), c4_rhs(n, m));
        }});

    cat.push_back(Identity{
        "C5",
        "Re Z(1^a,2,1^b) depends only on m = a+b+1: half of the C4 pair sum",
        IdentityKind::kRealPartEquality,
        [](const Point& p) {
          return p.size() == 3 && p[0] >= 1 && p[1] >= 1 && p[2] >= 0 && p[2] < p[1];
        },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          for (long m = 1; m <= clip(5, depth_max); ++m)
            for (long a = 0; a < m; ++a)
              for (long n = 2; n <= clip(15, n_max); ++n) g.push_back({n, m, a});
          return g;
        },
        [](const Point& p) {
          const long n = p[0], m = p[1], a = p[2], b = m - 1 - a;
          const Composition s = Composition::one_two_one(static_cast<int>(a), static_cast<int>(b));
          return expect(p, zeta_el(n, s).real_part(), c4_rhs(n, m) / Rational(2));
        }});

    cat.push_back(Identity{
        "C6",
        "conjugate(Z(s)) = Z(reverse s)",
        IdentityKind::kElementEquality,
        [](const Point& p) {
          if (p.size() < 2 || p[0] < 1) return false;
          for (std::size_t i = 1; i < p.size(); ++i)
            if (p[i] < 1) return false;
          return true;
        },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          if (n_max < 2 || depth_max < 1) return g;
          std::mt19937 rng(811);
          const long nm = clip(15, n_max);
          const long dm = clip(4, depth_max);
          for (int i = 0; i < 200; ++i) {
            Point p{2 + static_cast<long>(rng() % static_cast<unsigned long>(nm - 1))};
            const long depth = 1 + static_cast<long>(rng() % static_cast<unsigned long>(dm));
            for (long j = 0; j < depth; ++j)
              p.push_back(1 + static_cast<long>(rng() % 3));
            g.push_back(std::move(p));
          }
          return g;
        },
        [](const Point& p) {
          const long n = p[0];
          const Composition s(std::vector<long>(p.begin() + 1, p.end()));
          return expect(p, zeta_el(n, s).conjugate(), zeta_el(n, s.reversed()));
        }});

    cat.push_back(Identity{
        "C7",
        "depth-2 stuffle: Z(s1,s2) + Z(s2,s1) = Z(s1)Z(s2) - Z(s1+s2)",
        IdentityKind::kElementEquality,
        [](const Point& p) { return p.size() == 3 && p[0] >= 1 && p[1] >= 1 && p[2] >= 1; },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          if (depth_max < 2) return g;
          for (long s1 = 1; s1 <= 4; ++s1)
            for (long s2 = s1; s2 <= 4; ++s2)
              for (long n = 2; n <= clip(20, n_max); ++n) g.push_back({n, s1, s2});
          return g;
        },
        [](const Point& p) {
          const long n = p[0], s1 = p[1], s2 = p[2];
          const CycloElement lhs =
              zeta_el(n, Composition({s1, s2})) + zeta_el(n, Composition({s2, s1}));
          const CycloElement rhs = zeta_el(n, Composition({s1})) * zeta_el(n, Composition({s2})) -
                                   zeta_el(n, Composition({s1 + s2}));
          return expect(p, lhs, rhs);
        }});

    cat.push_back(Identity{
        "C8",
        "depth-3 stuffle symmetrization; doubled (1,1,2) sum is "
        "-(n-1)(n-2)(n-3)(n-9)/40",
        IdentityKind::kElementEquality,
        [](const Point& p) {
          if (p.size() == 1) return p[0] >= 1;
          if (p.size() != 4) return false;
          return p[0] >= 1 && p[1] >= 1 && p[2] >= 1 && p[3] >= 1;
        },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          if (depth_max < 3 || n_max < 2) return g;
          for (long n = 2; n <= clip(20, n_max); ++n) g.push_back({n});
          std::mt19937 rng(83);
          const long nm = clip(12, n_max);
          for (int i = 0; i < 50; ++i) {
            g.push_back({2 + static_cast<long>(rng() % static_cast<unsigned long>(nm - 1)),
                         1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 3),
                         1 + static_cast<long>(rng() % 3)});
          }
          return g;
        },
        [](const Point& p) {
          const long n = p[0];
          if (p.size() == 1) {
            const CycloElement lhs =
                Rational(2) * (zeta_el(n, Composition({1, 1, 2})) +
                               zeta_el(n, Composition({1, 2, 1})) +
                               zeta_el(n, Composition({2, 1, 1})));
            static const RationalPolynomial rhs =
                Rational(-1, 40) * (linear(1) * linear(2) * linear(3) * linear(9));
            return expect(p, lhs, rhs(Rational(n)));
          }
          const std::vector<long> s(p.begin() + 1, p.end());
          CycloElement lhs = CycloElement(Rational(0));
          for (const auto& ord : orderings(3)) {
            lhs += zeta_el(n, Composition({s[static_cast<std::size_t>(ord[0])],
                                           s[static_cast<std::size_t>(ord[1])],
                                           s[static_cast<std::size_t>(ord[2])]}));
          }
          auto z1 = [&](long t) { return zeta_el(n, Composition({t})); };
          CycloElement rhs = z1(s[0]) * z1(s[1]) * z1(s[2]);
          rhs -= z1(s[0] + s[1]) * z1(s[2]);
          rhs -= z1(s[0] + s[2]) * z1(s[1]);
          rhs -= z1(s[1] + s[2]) * z1(s[0]);
          rhs += Rational(2) * z1(s[0] + s[1] + s[2]);
          return expect(p, lhs, rhs);
        }});

    cat.push_back(Identity{
        "C9",
        "depth-4 stuffle symmetrization; 6x the (1,1,1,2) sum is "
        "-(n-1)(n-2)(n-3)(n-4)(n-11)/60",
        IdentityKind::kElementEquality,
        [](const Point& p) {
          if (p.size() == 1) return p[0] >= 1;
          if (p.size() != 5) return false;
          for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] < 1) return false;
          return true;
        },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          if (depth_max < 4 || n_max < 2) return g;
          for (long n = 2; n <= clip(20, n_max); ++n) g.push_back({n});
          std::mt19937 rng(94);
          const long nm = clip(12, n_max);
          for (int i = 0; i < 50; ++i) {
            g.push_back({2 + static_cast<long>(rng() % static_cast<unsigned long>(nm - 1)),
                         1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 3),
                         1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 3)});
          }
          return g;
        },
        [](const Point& p) {
          const long n = p[0];
          if (p.size() == 1) {
            const CycloElement lhs =
                Rational(6) *
                (zeta_el(n, Composition({1, 1, 1, 2})) + zeta_el(n, Composition({1, 1, 2, 1})) +
                 zeta_el(n, Composition({1, 2, 1, 1})) + zeta_el(n, Composition({2, 1, 1, 1})));
            static const RationalPolynomial rhs =
                Rational(-1, 60) * (linear(1) * linear(2) * linear(3) * linear(4) * linear(11));
            return expect(p, lhs, rhs(Rational(n)));
          }
          const std::vector<long> s(p.begin() + 1, p.end());
          CycloElement lhs = CycloElement(Rational(0));
          for (const auto& ord : orderings(4)) {
            lhs += zeta_el(n, Composition({s[static_cast<std::size_t>(ord[0])],
                                           s[static_cast<std::size_t>(ord[1])],
                                           s[static_cast<std::size_t>(ord[2])],
                                           s[static_cast<std::size_t>(ord[3])]}));
          }
          auto z1 = [&](long t) { return zeta_el(n, Composition({t})); };
          CycloElement rhs = z1(s[0]) * z1(s[1]) * z1(s[2]) * z1(s[3]);
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
              std::vector<int> rest;
              for (int t = 0; t < 4; ++t)
                if (t != i && t != j) rest.push_back(t);
              rhs -= z1(s[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(j)]) *
                     z1(s[static_cast<std::size_t>(rest[0])]) *
                     z1(s[static_cast<std::size_t>(rest[1])]);
            }
          rhs += z1(s[0] + s[1]) * z1(s[2] + s[3]);
          rhs += z1(s[0] + s[2]) * z1(s[1] + s[3]);
          rhs += z1(s[0] + s[3]) * z1(s[1] + s[2]);
          for (int l = 0; l < 4; ++l) {
            long t = 0;
            for (int i = 0; i < 4; ++i)
              if (i != l) t += s[static_cast<std::size_t>(i)];
            rhs += Rational(2) * (z1(t) * z1(s[static_cast<std::size_t>(l)]));
          }
          rhs -= Rational(6) * z1(s[0] + s[1] + s[2] + s[3]);
          return expect(p, lhs, rhs);
        }});

    cat.push_back(Identity{
        "C10",
        "Z_n(1^{n-2},2) = u_{n-1}/n with real part 1/(2n)",
        IdentityKind::kElementEquality,
        [](const Point& p) { return p.size() == 1 && p[0] >= 3; },
        [](long n_max, int) {
          std::vector<Point> g;
          for (long n = 3; n <= clip(20, n_max); ++n) g.push_back({n});
          return g;
        },
        [](const Point& p) {
          const long n = p[0];
          const CycloElement lhs =
              zeta_el(n, Composition::one_two_one(static_cast<int>(n) - 2, 0));
          const CycloContextPtr ctx = CycloContext::get(static_cast<int>(n));
          const CycloElement rhs = Rational(1, n) * u(ctx, n - 1);
          if (auto fail = expect(p, lhs, rhs)) return fail;
          return expect(p, lhs.real_part(), Rational(1, 2 * n));
        }});

    cat.push_back(Identity{
        "C11",
        "Re Z_n(1^{n-3},2) = (n-1)/(2n)",
        IdentityKind::kRealPartEquality,
        [](const Point& p) { return p.size() == 1 && p[0] >= 3; },
        [](long n_max, int) {
          std::vector<Point> g;
          for (long n = 3; n <= clip(20, n_max); ++n) g.push_back({n});
          return g;
        },
        [](const Point& p) {
          const long n = p[0];
          const CycloElement lhs =
              zeta_el(n, Composition::one_two_one(static_cast<int>(n) - 3, 0));
          return expect(p, lhs.real_part(), Rational(n - 1, 2 * n));
        }});

    cat.push_back(Identity{
        "C12",
        "pair sums Z(2,k) + Z(k,2) for k = 3..7 as factored polynomials in n",
        IdentityKind::kRationalEquality,
        [](const Point& p) { return p.size() == 2 && p[0] >= 1 && p[1] >= 3 && p[1] <= 7; },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          if (depth_max < 2) return g;
          for (long k = 3; k <= 7; ++k)
            for (long n = 2; n <= clip(20, n_max); ++n) g.push_back({n, k});
          return g;
        },
        [](const Point& p) {
          const long n = p[0], k = p[1];
          const CycloElement lhs =
              zeta_el(n, Composition({2, k})) + zeta_el(n, Composition({k, 2}));
          return expect(p, lhs, c12_poly(k)(Rational(n)));
        }});

    cat.push_back(Identity{
        "C13",
        "star identities for the (1^a,2,1^b) family, depths 2..5",
        IdentityKind::kRationalEquality,
        [](const Point& p) { return p.size() == 2 && p[0] >= 1 && p[1] >= 1 && p[1] <= 8; },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          for (long e = 1; e <= 8; ++e) {
            if (c13_entries()[static_cast<std::size_t>(e - 1)].index.depth() > depth_max) continue;
            for (long n = 2; n <= clip(20, n_max); ++n) g.push_back({n, e});
          }
          return g;
        },
        [](const Point& p) {
          const long n = p[0];
          const StarEntry& entry = c13_entries()[static_cast<std::size_t>(p[1] - 1)];
          CycloElement lhs = zeta_el(n, entry.index, true);
          if (entry.pair_sum) lhs += zeta_el(n, entry.index.reversed(), true);
          return expect(p, lhs, entry.poly(Rational(n)));
        }});

    cat.push_back(Identity{
        "C14",
        "T_n(m) = C(n,m)/(m+1)",
        IdentityKind::kRationalEquality,
        [](const Point& p) { return p.size() == 2 && p[0] >= 1 && p[1] >= 1; },
        [](long n_max, int depth_max) {
          std::vector<Point> g;
          for (long n = 1; n <= clip(10, n_max); ++n)
            for (long m = 1; m <= clip(4, depth_max); ++m) g.push_back({n, m});
          return g;
        },
        [](const Point& p) {
          const long n = p[0], m = p[1];
          return expect(p, evaluate_t(n, static_cast<int>(m)),
                        binomial(n, m) / Rational(m + 1));
        }});

    cat.push_back(Identity{
        "C15",
        "sum_m T_n(m) X^m matches ((X+1)^{n+1} - 1)/((n+1)X) coefficientwise",
        IdentityKind::kRationalEquality,
        [](const Point& p) { return p.size() == 1 && p[0] >= 1; },
        [](long n_max, int) {
          std::vector<Point> g;
          for (long n = 2; n <= clip(8, n_max); ++n) g.push_back({n});
          return g;
        },
        [](const Point& p) {
          const long n = p[0];
          // Coefficients beyond m = n vanish on both sides; M = n+2 covers that.
          for (long m = 0; m <= n + 2; ++m) {
            const Rational rhs = binomial(n + 1, m + 1) / Rational(n + 1);
            Point pt = p;
            pt.push_back(m);
            if (auto fail = expect(pt, evaluate_t(n, static_cast<int>(m)), rhs)) return fail;
          }
          return std::optional<Failure>{};
        }});

    return cat;
  }();
  return entries;
}

const Identity* find_identity(const std::string& id) {
  for (const Identity& ident : catalog()) {
    if (ident.id == id) return &ident;
  }
  return nullptr;
}

VerificationReport run_identity(const Identity& identity, const std::vector<Point>& points) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.id = identity.id;
  for (const Point& pt : points) {
    if (!identity.in_domain(pt)) {
      throw std::domain_error("run_identity: point outside the domain of " + identity.id);
    }
    ++report.points_tested;
    if (auto failure = identity.check(pt)) report.failures.push_back(std::move(*failure));
  }
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return report;
}

VerificationReport verify(const std::string& id, const std::vector<Point>& points) {
  const Identity* ident = find_identity(id);
  if (!ident) throw std::invalid_argument("verify: unknown identity id '" + id + "'");
  return run_identity(*ident, points);
}

VerificationReport verify_default(const std::string& id, long n_max, int depth_max) {
  const Identity* ident = find_identity(id);
  if (!ident) throw std::invalid_argument("verify: unknown identity id '" + id + "'");
  return run_identity(*ident, ident->default_grid(n_max, depth_max));
}

std::vector<VerificationReport> verify_all(long n_max, int depth_max, int parallelism) {
  if (n_max < 2) throw std::domain_error("verify_all: n_max must be >= 2");
  if (parallelism < 1) throw std::invalid_argument("verify_all: parallelism must be >= 1");
  const std::vector<Identity>& cat = catalog();
  std::vector<VerificationReport> reports(cat.size());
  std::vector<std::exception_ptr> errors(cat.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cat.size()) return;
      try {
        reports[i] = run_identity(cat[i], cat[i].default_grid(n_max, depth_max));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (parallelism == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int count = std::min<int>(parallelism, static_cast<int>(cat.size()));
    pool.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json fail_list = nlohmann::json::array();
  for (const Failure& f : failures) {
    nlohmann::json point = nlohmann::json::array();
    for (long v : f.point) point.push_back(v);
    fail_list.push_back(
        nlohmann::json{{"point", std::move(point)}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return nlohmann::json{{"id", id},
                        {"pass", pass()},
                        {"points_tested", points_tested},
                        {"failures", std::move(fail_list)},
                        {"ms", ms}};
}

std::vector<DiscoveryTarget> discovery_targets() {
  std::vector<DiscoveryTarget> targets;
  for (long s = 2; s <= 9; ++s) {
    targets.push_back({"C2:s=" + std::to_string(s), Composition({s}), false,
                       DiscoveryMode::kFullValue, factored_string(c2_poly(s))});
  }
  for (long k = 3; k <= 7; ++k) {
    targets.push_back({"C12:k=" + std::to_string(k), Composition({2, k}), false,
                       DiscoveryMode::kSymmetricPair, factored_string(c12_poly(k))});
  }
  const auto& star = c13_entries();
  for (std::size_t i = 0; i < star.size(); ++i) {
    targets.push_back({"C13:" + std::to_string(i + 1), star[i].index, true,
                       star[i].pair_sum ? DiscoveryMode::kSymmetricPair
                                        : DiscoveryMode::kFullValue,
                       factored_string(star[i].poly)});
  }
  return targets;
}

}  // namespace qzeta
