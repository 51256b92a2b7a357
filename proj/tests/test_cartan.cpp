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

#include "hr/cartan.hpp"
#include "hr/gaussian_rational.hpp"
#include "hr/rng.hpp"

using namespace hr;

TEST_CASE("so(1,1) slot is spanned by the swap matrix") {
  const auto pair = make_pair(PairKind::SoNN, 1);
  const auto basis = p_basis(pair);
  REQUIRE(basis.size() == 1);
  CHECK(basis.front() == RationalMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(p_membership(pair, basis.front()));
}

TEST_CASE("gl(2,R) slot has dimension 3") {
  const auto pair = make_pair(PairKind::GlR, 2);
  CHECK(p_basis(pair).size() == 3);
  for (const auto& b : p_basis(pair)) CHECK(p_membership(pair, b));
}

TEST_CASE("o(3) slot holds skew matrices, dimension 3") {
  const auto pair = make_pair(PairKind::ON, 3);
  const auto basis = p_basis(pair);
  CHECK(basis.size() == 3);
  for (const auto& b : basis) {
    CHECK(is_skew_symmetric(b));
    CHECK(p_membership(pair, b));
  }
}

TEST_CASE("membership rejects matrices outside the slot") {
  const auto so = make_pair(PairKind::SoNN, 2);
  CHECK(!p_membership(
      so, RationalMatrix::diagonal({rat(1), rat(1), rat(1), rat(-1)})));
  CHECK_THROWS_AS(p_membership(so, RationalMatrix::identity(3)),
                  std::invalid_argument);

  const auto gl = make_pair(PairKind::GlR, 2);
  CHECK(!p_membership(gl, RationalMatrix::from_rows({{0, 1}, {-1, 0}})));

  const auto sl = make_pair(PairKind::SlR, 2);
  CHECK(!p_membership(sl, RationalMatrix::identity(2)));  // trace 2
  CHECK(p_membership(sl, RationalMatrix::diagonal({rat(1), rat(-1)})));

  const auto glc = make_pair(PairKind::GlC, 2);
  for (const auto& b : p_basis(glc)) CHECK(p_membership(glc, b));
  CHECK(p_basis(glc).size() == 4);  // Hermitian 2x2 over C has dimension 4
  CHECK(!p_membership(glc, RationalMatrix::diagonal(
                               {rat(1), rat(1), rat(1), rat(-1)})));
}

TEST_CASE("so(N,N) witnesses verify exactly") {
  for (const long n : {1L, 2L, 4L, 8L}) {
    const auto pair = make_pair(PairKind::SoNN, n);
    const auto bound = rho1_table_bound(pair);
    REQUIRE(bound.has_value());
    const auto fam = build_rho1_witness(pair, static_cast<int>(*bound));
    CHECK(fam.mats.size() == static_cast<size_t>(*bound));
    CHECK(check_witness(fam).ok);
  }
}

TEST_CASE("so(1,1) witness is the swap matrix") {
  const auto fam = build_rho1_witness(make_pair(PairKind::SoNN, 1), 1);
  CHECK(fam.mats.front() == RationalMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(fam.mats.front() * fam.mats.front() == RationalMatrix::identity(2));
}

TEST_CASE("so(3,3) allows one witness and refuses two") {
  const auto pair = make_pair(PairKind::SoNN, 3);
  const auto fam = build_rho1_witness(pair, 1);
  CHECK(check_witness(fam).ok);
  CHECK_THROWS_AS(build_rho1_witness(pair, 2), TableBoundError);
}

TEST_CASE("gl and sl witnesses verify and stay inside the slot") {
  const auto gl = make_pair(PairKind::GlR, 4);
  const auto glb = rho1_table_bound(gl);
  REQUIRE(glb.has_value());
  CHECK(*glb == 3);  // rho(2) + 1
  CHECK(check_witness(build_rho1_witness(gl, 3)).ok);

  const auto sl = make_pair(PairKind::SlR, 4);
  const auto slb = rho1_table_bound(sl);
  REQUIRE(slb.has_value());
  CHECK(*slb == 3);
  const auto fam = build_rho1_witness(sl, 3);
  for (const auto& a : fam.mats) CHECK(a.trace() == 0);
  CHECK(check_witness(fam).ok);
  CHECK_THROWS_AS(build_rho1_witness(sl, 4), TableBoundError);

  CHECK_THROWS_AS(build_rho1_witness(make_pair(PairKind::ON, 4), 1),
                  std::invalid_argument);
}

TEST_CASE("odd sl impossibility") {
  for (const long m : {3L, 5L}) {
    const auto report = odd_sl_impossibility(m, 42, 1000);
    CHECK(report.impossible);
    CHECK(report.candidates_tested == 1000);
    CHECK(report.violations == 1000);
    CHECK(!report.argument.empty());
  }
  CHECK_THROWS_AS(odd_sl_impossibility(4), std::invalid_argument);
  CHECK_THROWS_AS(odd_sl_impossibility(1), std::invalid_argument);
}

TEST_CASE("odd sl single witness") {
  const auto fam3 = build_rho2_witness_odd_sl(3);
  CHECK(fam3.mats.front() ==
        RationalMatrix::diagonal({rat(1), rat(1), rat(-2)}));
  CHECK(det(fam3.mats.front()) == -2);
  CHECK(check_witness(fam3).ok);

  const auto fam5 = build_rho2_witness_odd_sl(5);
  CHECK(fam5.mats.front().trace() == 0);
  CHECK(det(fam5.mats.front()) != 0);
  CHECK(check_witness(fam5).ok);
}

TEST_CASE("witness claims catch corrupted families") {
  auto fam = build_rho1_witness(make_pair(PairKind::SoNN, 2), 2);
  fam.mats[1] = fam.mats[0];  // duplicate: anticommutator becomes 2I
  const auto check = check_witness(fam);
  CHECK(!check.ok);
  CHECK(check.i == 1);
  CHECK(check.j == 2);
}

TEST_CASE("clifford claim forces span nonsingularity at random points") {
  const auto fam = build_rho1_witness(make_pair(PairKind::SoNN, 4), 4);
  const int dim = fam.pair.rep_dim;
  SplitMix64 g(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> t(fam.mats.size());
    bool nonzero = false;
    for (auto& v : t) {
      v = rat(g.next_in(-5, 5), g.next_in(1, 3));
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) t[0] = 1;
    RationalMatrix combo(dim, dim);
    for (size_t i = 0; i < t.size(); ++i) combo = combo + t[i] * fam.mats[i];
    Rational norm2 = 0;
    for (const auto& v : t) norm2 += v * v;
    // The square collapses to ||t||^2 I, hence invertibility.
    CHECK(combo * combo == norm2 * RationalMatrix::identity(dim));
    CHECK(det(combo) != 0);
  }
}

TEST_CASE("realified complex witnesses keep their relations") {
  const auto fam = complex_hermitian_family(3);
  REQUIRE(fam.size() == 3);
  const int d = fam.front().first.rows();
  // Complex identities, checked exactly over the Gaussian rationals.
  std::vector<ComplexMatrix> cm;
  for (const auto& [re, im] : fam) cm.push_back(ComplexMatrix::from_parts(re, im));
  const auto id = ComplexMatrix::identity(d);
  for (size_t i = 0; i < cm.size(); ++i)
    for (size_t j = 0; j < cm.size(); ++j) {
      const auto anti = cm[i] * cm[j] + cm[j] * cm[i];
      const auto expect =
          (i == j) ? GaussianRational{rat(2), rat(0)} * id : ComplexMatrix(d, d);
      CHECK(anti == expect);
    }
  // The same identities at doubled size after realification.
  const auto glc = make_pair(PairKind::GlC, d);
  const RationalMatrix id2 = RationalMatrix::identity(2 * d);
  std::vector<RationalMatrix> real;
  for (const auto& [re, im] : fam) real.push_back(realify_matrix(re, im));
  for (const auto& r : real) CHECK(p_membership(glc, r));
  for (size_t i = 0; i < real.size(); ++i)
    for (size_t j = 0; j < real.size(); ++j) {
      const auto anti = real[i] * real[j] + real[j] * real[i];
      CHECK(anti == (i == j ? Rational(2) * id2 : RationalMatrix(2 * d, 2 * d)));
    }
}

TEST_CASE("catalog generators live inside their slots") {
  for (const auto& name : {"so(4,4)", "gl(4,R)", "o(4)", "sl(3,R)", "gl(2,C)"}) {
    const auto pair = make_pair(name);
    for (const auto& g : catalog_generators(pair))
      CHECK(p_membership(pair, g));
  }
}
