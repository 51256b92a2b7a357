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

#ifndef HR_HURWITZ_HPP
#define HR_HURWITZ_HPP

#include <string>

#include "hr/rational.hpp"

namespace hr {

/// n = 2^(4a+b) * (2c+1) with 0 <= b <= 3; the triple is unique.
struct HurwitzDecomposition {
  long a = 0;
  long b = 0;
  long c = 0;
  unsigned long n = 0;
};

HurwitzDecomposition decompose(unsigned long n);

/// The Hurwitz-Radon number: rho(n) = 8a + 2^b.
long rho(unsigned long n);

long ord2(unsigned long n);

/// rho on positive rationals: delegates to rho for integers and returns 0
/// otherwise. The 0 fallback is a convention for table rows whose argument
/// (N/2, N/4, ...) need not be integral; it is not standard usage.
long rho_extended(const Rational& q);

/// Classical pairs, keyed the way the closed-form table parameterizes
/// them. SlOdd covers sl(2N+1, D) for any division algebra D.
enum class PairFamily {
  SoNN,    // so(N,N)
  GlR,     // gl(N,R)
  SpR,     // sp(N,R)
  SpC,     // sp(N,C)
  SpNN,    // sp(N,N)
  GlH,     // gl(N,H)
  SoStar,  // so*(2N)
  SoC,     // so(N,C)
  GlC,     // gl(N,C)
  SuNN,    // su(N,N)
  Sl2NR,   // sl(2N,R)
  Sl2NC,   // sl(2N,C)
  Sl2NH,   // sl(2N,H)
  Sl1,     // sl(1,D)
  SuPQ,    // su(p,q;D), p != q
  SlOdd,   // sl(2N+1,D)
};

enum class DivisionAlgebra { R, C, H };

struct ClassicalPair {
  PairFamily family;
  long n = 1;  // the table parameter N
  DivisionAlgebra algebra = DivisionAlgebra::R;
  long p = 0, q = 0;  // su(p,q;D) only
};

struct TableValue {
  long rho1 = 0;
  long rho2 = 0;
};

/// Closed-form values for the pair; rho1 == rho2 except for sl(2N+1, D)
/// where the result is (0, 1). Throws on invalid size parameters.
TableValue table_value(const ClassicalPair& pair);

/// Symbolic family name as used on the command line, e.g. "so(N,N)",
/// "sl(2N+1,R)", "su(p,q;C)".
PairFamily parse_family(const std::string& name);
std::string family_name(PairFamily family);

/// Concrete pair, e.g. "so(8,8)", "gl(4,C)", "sl(3,R)" (odd sl sizes map
/// onto the sl(2N+1, D) family), "su(2,3;C)", "so*(8)".
ClassicalPair parse_classical_pair(const std::string& name);
std::string pair_name(const ClassicalPair& pair);

}  // namespace hr

#endif  // HR_HURWITZ_HPP
