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

#include "hr/hurwitz.hpp"

using namespace hr;

TEST_CASE("dyadic decomposition") {
  auto d = decompose(1);
  CHECK(d.a == 0);
  CHECK(d.b == 0);
  CHECK(d.c == 0);

  d = decompose(12);  // 2^2 * 3
  CHECK(d.a == 0);
  CHECK(d.b == 2);
  CHECK(d.c == 1);

  d = decompose(16);  // 2^4
  CHECK(d.a == 1);
  CHECK(d.b == 0);
  CHECK(d.c == 0);

  CHECK_THROWS_AS(decompose(0), std::invalid_argument);

  for (unsigned long n = 1; n <= 512; ++n) {
    d = decompose(n);
    CHECK(d.n == n);
    CHECK((1uL << (4 * d.a + d.b)) * (2 * d.c + 1) == n);
    CHECK(d.b >= 0);
    CHECK(d.b <= 3);
  }
}

TEST_CASE("rho values") {
  CHECK(rho(3) == 1);
  CHECK(rho(8) == 8);
  CHECK(rho(16) == 9);
  CHECK(rho(1) == 1);
  CHECK(rho(2) == 2);
  CHECK(rho(4) == 4);
  CHECK(rho(32) == 10);
  CHECK(rho(64) == 12);
}

TEST_CASE("rho parity and sixteen-fold laws") {
  for (unsigned long n = 1; n <= 128; n += 2) CHECK(rho(n) == 1);
  for (unsigned long n = 1; n <= 64; ++n) CHECK(rho(16 * n) == rho(n) + 8);
}

TEST_CASE("rho_extended") {
  CHECK(rho_extended(rat(8)) == 8);
  CHECK(rho_extended(rat(3, 2)) == 0);
  CHECK(rho_extended(rat(1)) == 1);
  CHECK_THROWS_AS(rho_extended(rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(rho_extended(rat(-2)), std::invalid_argument);
}

TEST_CASE("table values for the named examples") {
  const auto so88 = table_value({PairFamily::SoNN, 8});
  CHECK(so88.rho1 == 8);
  CHECK(so88.rho2 == 8);

  const auto gl4c = table_value({PairFamily::GlC, 4});
  CHECK(gl4c.rho1 == 5);  // 2*ord2(4)+1
  CHECK(gl4c.rho2 == 5);

  const auto sl3 = table_value(parse_classical_pair("sl(3,R)"));
  CHECK(sl3.rho1 == 0);
  CHECK(sl3.rho2 == 1);
}

TEST_CASE("rho1 <= rho2 across the grid") {
  const PairFamily families[] = {
      PairFamily::SoNN, PairFamily::GlR,   PairFamily::SpR,
      PairFamily::SpC,  PairFamily::SpNN,  PairFamily::GlH,
      PairFamily::SoStar, PairFamily::SoC, PairFamily::GlC,
      PairFamily::SuNN, PairFamily::Sl2NR, PairFamily::Sl2NC,
      PairFamily::Sl2NH, PairFamily::Sl1,  PairFamily::SlOdd};
  for (const auto family : families)
    for (long n = 1; n <= 32; ++n) {
      const auto v = table_value({family, n});
      CHECK(v.rho1 <= v.rho2);
    }
  const auto v = table_value(parse_classical_pair("su(2,3;C)"));
  CHECK(v.rho1 == 0);
  CHECK(v.rho2 == 0);
}

TEST_CASE("so(N,N) row equals rho(N) for N up to 64") {
  for (long n = 1; n <= 64; ++n)
    CHECK(table_value({PairFamily::SoNN, n}).rho1 == rho(n));
}

TEST_CASE("odd sl sizes give (0, 1)") {
  for (long m : {3L, 5L, 7L, 9L, 21L}) {
    const auto v = table_value(parse_classical_pair("sl(" + std::to_string(m) +
                                                    ",R)"));
    CHECK(v.rho1 == 0);
    CHECK(v.rho2 == 1);
  }
}

TEST_CASE("pair name round trips") {
  for (const std::string name :
       {"so(8,8)", "gl(4,C)", "gl(4,R)", "sp(4,R)", "sp(4,C)", "sp(4,4)",
        "gl(4,H)", "so*(8)", "so(16,C)", "su(4,4)", "sl(6,R)", "sl(6,C)",
        "sl(6,H)", "sl(1,H)", "su(2,3;C)", "sl(7,C)"}) {
    const auto pair = parse_classical_pair(name);
    CHECK(pair_name(pair) == name);
  }
  CHECK_THROWS_AS(parse_classical_pair("e8(248)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_classical_pair("su(2,2;C)"), std::invalid_argument);
  CHECK(parse_family("sl(2N+1,R)") == PairFamily::SlOdd);
  CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
}

TEST_CASE("fractional table arguments fall back to the 0 convention") {
  // gl(N,R) at odd N: rho(N/2) is not defined on integers, the row
  // evaluates to 0 + 1.
  CHECK(table_value({PairFamily::GlR, 3}).rho1 == 1);
  // so(N,C) needs N divisible by 16 for a nonzero rho term.
  CHECK(table_value({PairFamily::SoC, 16}).rho1 == 8);
  CHECK(table_value({PairFamily::SoC, 8}).rho1 == 7);
}
