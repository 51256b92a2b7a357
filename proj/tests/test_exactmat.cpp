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

#include "hr/matrix.hpp"
#include "hr/rng.hpp"

using namespace hr;

namespace {

RationalMatrix random_int_matrix(int n, SplitMix64& g, long lo = -2,
                                 long hi = 2) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational(g.next_in(lo, hi));
  return m;
}

// Expansion along the first row, independent of the Bareiss path.
Rational det_cofactor_oracle(const RationalMatrix& a) {
  const int n = a.rows();
  if (n == 1) return a.at(0, 0);
  Rational acc = 0;
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = a.at(r, c);
      }
    }
    const Rational term = a.at(0, j) * det_cofactor_oracle(minor);
    acc += (j % 2 == 0) ? term : Rational(-term);
  }
  return acc;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(rat_str(rat(2, 4)) == "1/2");
  CHECK(rat_str(rat(-2, 4)) == "-1/2");
  CHECK(rat_str(rat(3, -6)) == "-1/2");
  CHECK(rat_str(rat(7, 1)) == "7");
  CHECK(rat_parse("3/9") == rat(1, 3));
  CHECK(rat_parse("-5") == rat(-5));
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("product identities") {
  const auto i2 = RationalMatrix::identity(2);
  CHECK(i2 * i2 == i2);

  const auto j = RationalMatrix::from_rows({{0, 1}, {-1, 0}});
  CHECK(j * j == -i2);

  CHECK_THROWS_AS(mat_mul(RationalMatrix(2, 3), RationalMatrix(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("product matches the triple-sum oracle on random 3x3 pairs") {
  SplitMix64 g(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_int_matrix(3, g, -5, 5);
    const auto b = random_int_matrix(3, g, -5, 5);
    const auto p = a * b;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rational s = 0;
        for (int k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
        CHECK(p.at(i, j) == s);
      }
  }
}

TEST_CASE("determinant basics") {
  CHECK(det(RationalMatrix::identity(3)) == 1);
  CHECK(det(RationalMatrix::diagonal({rat(1), rat(1), rat(-2)})) == -2);
  CHECK_THROWS_AS(det(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant matches cofactor oracle on random 4x4") {
  SplitMix64 g(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_int_matrix(4, g);
    CHECK(det(a) == det_cofactor_oracle(a));
  }
  // Rational entries exercise the denominator-clearing path.
  RationalMatrix q(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      q.at(i, j) = rat(g.next_in(-6, 6), g.next_in(1, 4));
  CHECK(det(q) == det_cofactor_oracle(q));
}

TEST_CASE("det is multiplicative up to size 5") {
  SplitMix64 g(37);
  for (int n = 2; n <= 5; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const auto a = random_int_matrix(n, g);
      const auto b = random_int_matrix(n, g);
      CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("rank and null space") {
  const auto a = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(rank(a) == 2);
  const auto basis = null_space(a);
  REQUIRE(basis.size() == 1);
  const auto v = basis.front();
  const auto av = mat_vec(a, v);
  for (const auto& x : av) CHECK(x == 0);

  CHECK(rank(RationalMatrix::identity(4)) == 4);
  CHECK(!kernel_vector(RationalMatrix::identity(4)).has_value());
  CHECK(kernel_vector(RationalMatrix(3, 3)).has_value());
}

TEST_CASE("structure predicates") {
  const auto x = RationalMatrix::from_rows({{0, 1}, {1, 0}});
  const auto j = RationalMatrix::from_rows({{0, 1}, {-1, 0}});
  CHECK(is_symmetric(x));
  CHECK(!is_symmetric(j));
  CHECK(is_skew_symmetric(j));
  CHECK(is_signed_permutation(x));
  CHECK(is_signed_permutation(j));
  CHECK(!is_signed_permutation(RationalMatrix::from_rows({{1, 1}, {0, 1}})));
  CHECK(is_positive_definite(RationalMatrix::identity(3)));
  CHECK(!is_positive_definite(RationalMatrix::diagonal({rat(1), rat(-1)})));
  CHECK(is_positive_definite(RationalMatrix::from_rows({{2, 1}, {1, 2}})));
}

TEST_CASE("kron and block assembly") {
  const auto i2 = RationalMatrix::identity(2);
  const auto j = RationalMatrix::from_rows({{0, 1}, {-1, 0}});
  const auto k = kron(i2, j);
  CHECK(k.rows() == 4);
  CHECK(k * k == -RationalMatrix::identity(4));

  const auto b = block2x2(RationalMatrix(2, 2), i2, i2, RationalMatrix(2, 2));
  CHECK(b * b == RationalMatrix::identity(4));
}
