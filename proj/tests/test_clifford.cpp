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

#include <bit>

#include "hr/clifford.hpp"
#include "hr/hurwitz.hpp"
#include "hr/rng.hpp"

using namespace hr;

namespace {

CliffordElement random_sparse(CliffordSignature sig, SplitMix64& g,
                              int max_terms = 4) {
  CliffordElement e(sig);
  const uint32_t all = (1u << sig.generators()) - 1;
  const int terms = static_cast<int>(g.next_in(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    const uint32_t mask = static_cast<uint32_t>(g.next()) & all;
    e.add_term(mask, rat(g.next_in(-3, 3), g.next_in(1, 2)));
  }
  return e;
}

}  // namespace

TEST_CASE("generator squares follow the signature") {
  const auto sig10 = CliffordSignature{1, 0};
  const auto e1 = CliffordElement::generator(sig10, 1);
  CHECK(blade_mul(e1, e1) == CliffordElement::scalar(sig10, 1));

  const auto sig01 = CliffordSignature{0, 1};
  const auto f1 = CliffordElement::generator(sig01, 1);
  CHECK(blade_mul(f1, f1) == CliffordElement::scalar(sig01, -1));
}

TEST_CASE("generators anticommute") {
  const auto sig = CliffordSignature{2, 0};
  const auto e1 = CliffordElement::generator(sig, 1);
  const auto e2 = CliffordElement::generator(sig, 2);
  const auto sum = blade_mul(e1, e2) + blade_mul(e2, e1);
  CHECK(sum == CliffordElement(sig));
}

TEST_CASE("bivector square in Cl(0,2)") {
  // (e1 e2)(e1 e2) = -e1 e1 e2 e2 = -(-1)(-1) = -1, expanding one swap
  // then the two generator squares.
  const auto sig = CliffordSignature{0, 2};
  const auto e12 = CliffordElement::blade(sig, 0b11);
  CHECK(blade_mul(e12, e12) == CliffordElement::scalar(sig, -1));
}

TEST_CASE("signature mismatch is rejected") {
  const auto a = CliffordElement::scalar({1, 0}, 1);
  const auto b = CliffordElement::scalar({0, 1}, 1);
  CHECK_THROWS_AS(blade_mul(a, b), std::invalid_argument);
}

TEST_CASE("product is associative on random sparse triples") {
  SplitMix64 g(71);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = static_cast<int>(g.next_in(0, 3));
    const int q = static_cast<int>(g.next_in(0, 5 - p));
    const CliffordSignature sig{p, q};
    const auto x = random_sparse(sig, g);
    const auto y = random_sparse(sig, g);
    const auto z = random_sparse(sig, g);
    CHECK(blade_mul(blade_mul(x, y), z) == blade_mul(x, blade_mul(y, z)));
  }
}

TEST_CASE("blades stay inside the algebra") {
  SplitMix64 g(72);
  const CliffordSignature sig{2, 3};
  const uint32_t all = (1u << sig.generators()) - 1;
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_sparse(sig, g);
    const auto y = random_sparse(sig, g);
    for (const auto& [mask, c] : blade_mul(x, y).terms()) {
      CHECK((mask & ~all) == 0);
      CHECK(c != 0);
    }
  }
  CHECK_THROWS_AS(CliffordElement::blade(sig, 1u << 5),
                  std::invalid_argument);
}

TEST_CASE("epsilon family base cases") {
  const auto plus1 = build_epsilon_family(1, 1);
  CHECK(plus1.dim == 1);
  CHECK(plus1.matrices.front() == RationalMatrix::identity(1));

  const auto minus1 = build_epsilon_family(1, -1);
  CHECK(minus1.dim == 2);
  CHECK(minus1.matrices.front() ==
        RationalMatrix::from_rows({{0, 1}, {-1, 0}}));

  const auto minus3 = build_epsilon_family(3, -1);
  CHECK(minus3.dim == 4);
  CHECK(verify_epsilon_family(minus3).ok);

  CHECK_THROWS_AS(build_epsilon_family(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_epsilon_family(2, 3), std::invalid_argument);
}

TEST_CASE("family dimensions follow the doubling recursion") {
  const int skew_dims[] = {2, 4, 4, 8, 8, 8, 8, 16, 32};
  for (int n = 1; n <= 9; ++n)
    CHECK(build_epsilon_family(n, -1).dim == skew_dims[n - 1]);
  const int sym_dims[] = {1, 2, 4, 8, 8, 16, 16, 16, 16};
  for (int n = 1; n <= 9; ++n)
    CHECK(build_epsilon_family(n, 1).dim == sym_dims[n - 1]);
}

TEST_CASE("families are signed permutations with the right symmetry") {
  for (int n = 1; n <= 8; ++n) {
    for (int eps : {1, -1}) {
      const auto fam = build_epsilon_family(n, eps);
      for (const auto& t : fam.matrices) {
        CHECK(is_signed_permutation(t));
        if (eps == 1)
          CHECK(is_symmetric(t));
        else
          CHECK(is_skew_symmetric(t));
      }
    }
  }
}

TEST_CASE("skew family size respects the sphere bound") {
  for (int n = 1; n <= 9; ++n) {
    const auto fam = build_epsilon_family(n, -1);
    CHECK(n <= rho(static_cast<unsigned long>(fam.dim)) - 1);
  }
}

TEST_CASE("verification reports the first failing pair") {
  const auto i2 = RationalMatrix::identity(2);
  EpsilonFamily bad{1, 2, 2, {i2, i2}};
  const auto check = verify_epsilon_family(bad);
  CHECK(!check.ok);
  CHECK(check.i == 1);
  CHECK(check.j == 2);

  EpsilonFamily wrong_sign{-1, 1, 2,
                           {RationalMatrix::diagonal({rat(1), rat(-1)})}};
  const auto check2 = verify_epsilon_family(wrong_sign);
  CHECK(!check2.ok);
  CHECK(check2.i == 1);
  CHECK(check2.j == 1);
}

TEST_CASE("algebra homomorphism on generators and the unit") {
  const auto fam = build_epsilon_family(3, -1);
  const CliffordRepresentation rep(fam);
  const auto sig = rep.signature();
  CHECK(sig.p == 0);
  CHECK(sig.q == 3);
  CHECK(rep(CliffordElement::scalar(sig, 1)) ==
        RationalMatrix::identity(fam.dim));
  for (int i = 1; i <= 3; ++i)
    CHECK(rep(CliffordElement::generator(sig, i)) == fam.matrices[i - 1]);

  // Blade image equals the matrix product in either evaluation order.
  const auto e12 = CliffordElement::blade(sig, 0b11);
  CHECK(rep(e12) == fam.matrices[0] * fam.matrices[1]);
  CHECK(rep(blade_mul(e12, e12)) == rep(e12) * rep(e12));
}

TEST_CASE("algebra homomorphism is multiplicative on random pairs") {
  SplitMix64 g(73);
  for (int eps : {1, -1}) {
    const auto fam = build_epsilon_family(4, eps);
    const CliffordRepresentation rep(fam);
    const auto sig = rep.signature();
    for (int trial = 0; trial < 60; ++trial) {
      const auto x = random_sparse(sig, g, 3);
      const auto y = random_sparse(sig, g, 3);
      CHECK(rep(blade_mul(x, y)) == rep(x) * rep(y));
    }
  }
}

TEST_CASE("unverified families cannot be extended") {
  const auto i2 = RationalMatrix::identity(2);
  EpsilonFamily bad{1, 2, 2, {i2, i2}};
  CHECK_THROWS_AS(CliffordRepresentation{bad}, std::invalid_argument);
}
