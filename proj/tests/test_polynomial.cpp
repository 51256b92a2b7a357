// Copyright 2026 The hurwitz-radon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hr/polynomial.hpp"
#include "hr/rng.hpp"

using namespace hr;

namespace {

Polynomial linear(long root_num, long root_den = 1) {
  // (den*t - num)
  return Polynomial({rat(-root_num), rat(root_den)});
}

Polynomial from_coeffs(std::vector<long> c) {
  std::vector<Rational> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = rat(c[i]);
  return Polynomial(std::move(r));
}

}  // namespace

TEST_CASE("arithmetic and division") {
  const auto p = from_coeffs({1, 0, 1});   // 1 + t^2
  const auto q = from_coeffs({-1, 1});     // t - 1
  CHECK((p * q).degree() == 3);
  const auto [quot, rem] = (p * q).divmod(q);
  CHECK(quot == p);
  CHECK(rem.is_zero());
  CHECK(p.eval(rat(2)) == 5);
  CHECK(p.derivative() == from_coeffs({0, 2}));
}

TEST_CASE("root counting on the whole line") {
  CHECK(count_real_roots(from_coeffs({1, 0, 1})) == 0);   // t^2 + 1
  CHECK(count_real_roots(from_coeffs({-1, 0, 1})) == 2);  // t^2 - 1
  // (t-1)(t-2)(t^2+1)(t+3): three real roots by construction.
  const auto p =
      linear(1) * linear(2) * from_coeffs({1, 0, 1}) * linear(-3);
  CHECK(p.degree() == 5);
  CHECK(count_real_roots(p) == 3);
  CHECK_THROWS_AS(count_real_roots(Polynomial{}), std::invalid_argument);
}

TEST_CASE("root counting respects interval bounds") {
  const auto p = linear(1) * linear(2) * linear(-3);
  Interval iv;
  iv.lo = rat(0);
  iv.hi = rat(5);
  CHECK(count_real_roots(p, iv) == 2);
  iv.lo = rat(1);  // open at a root
  CHECK(count_real_roots(p, iv) == 1);
  iv.lo_closed = true;
  CHECK(count_real_roots(p, iv) == 2);
  iv.hi = rat(2);
  iv.hi_closed = false;
  CHECK(count_real_roots(p, iv) == 1);
  iv.hi_closed = true;
  CHECK(count_real_roots(p, iv) == 2);
}

TEST_CASE("count on a product of coprime factors adds up") {
  SplitMix64 g(5);
  for (int trial = 0; trial < 20; ++trial) {
    // Distinct rational roots plus an irreducible quadratic.
    std::vector<long> roots;
    while (roots.size() < 3) {
      const long r = g.next_in(-8, 8);
      bool fresh = true;
      for (long s : roots) fresh = fresh && s != r;
      if (fresh) roots.push_back(r);
    }
    Polynomial p = from_coeffs({1});
    for (long r : roots) p = p * linear(r);
    p = p * from_coeffs({1, 0, 1});
    CHECK(count_real_roots(p) == 3);
    // Multiplicity does not change the distinct count.
    CHECK(count_real_roots(p * linear(roots[0])) == 3);
  }
}

TEST_CASE("root isolation recovers exact rational roots") {
  const auto p = linear(1, 3) * from_coeffs({1, 0, 1});  // root 1/3
  const auto cert = isolate_real_root(p);
  REQUIRE(cert.has_value());
  REQUIRE(cert->exact_root.has_value());
  CHECK(*cert->exact_root == rat(1, 3));

  CHECK(!isolate_real_root(from_coeffs({1, 0, 1})).has_value());
}

TEST_CASE("root isolation certifies irrational roots by sign change") {
  const auto p = from_coeffs({-2, 0, 1});  // t^2 - 2
  const auto cert = isolate_real_root(p);
  REQUIRE(cert.has_value());
  REQUIRE(cert->interval.has_value());
  const auto [lo, hi] = *cert->interval;
  const auto q = squarefree_part(p);
  CHECK(sgn(q.eval(lo)) * sgn(q.eval(hi)) < 0);
}

TEST_CASE("characteristic polynomial basics") {
  CHECK(char_poly(RationalMatrix(2, 2)) == from_coeffs({0, 0, 1}));
  const auto j = RationalMatrix::from_rows({{0, 1}, {-1, 0}});
  CHECK(char_poly(j) == from_coeffs({1, 0, 1}));
}

TEST_CASE("char poly evaluation matches det(tI - A)") {
  SplitMix64 g(17);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.at(i, j) = Rational(g.next_in(-4, 4));
    const auto p = char_poly(a);
    for (long t = 0; t <= 3; ++t) {
      const auto ti = rat(t) * RationalMatrix::identity(3);
      CHECK(p.eval(rat(t)) == det(ti - a));
    }
  }
}

TEST_CASE("interpolation reproduces a known cubic") {
  const auto p = from_coeffs({2, -1, 0, 5});
  std::vector<std::pair<Rational, Rational>> nodes;
  for (long x = -2; x <= 1; ++x) nodes.emplace_back(rat(x), p.eval(rat(x)));
  CHECK(lagrange_interpolate(nodes) == p);
}
