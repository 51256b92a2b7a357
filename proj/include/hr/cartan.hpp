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

#ifndef HR_CARTAN_HPP
#define HR_CARTAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hr/hurwitz.hpp"
#include "hr/matrix.hpp"

namespace hr {

/// Catalogued pairs with an explicit matrix model of the symmetric slot:
/// so(N,N) block-off-diagonal, gl(N,R) symmetric, o(N) skew (the whole
/// algebra), sl(M,R) traceless symmetric, gl(N,C) realified Hermitian.
enum class PairKind { SoNN, GlR, ON, SlR, GlC };

/// Thrown when a requested family size exceeds the closed-form table
/// bound; the refusal is table-driven, not search-certified.
class TableBoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CartanPair {
  PairKind kind;
  long param = 1;   // the size parameter as written in the pair name
  int rep_dim = 1;  // real matrix size after realification
  std::optional<RationalMatrix> form;  // invariant bilinear form, if any
};

CartanPair make_pair(PairKind kind, long size);
/// Accepts "so(8,8)", "gl(2,R)", "o(3)", "sl(3,R)", "gl(2,C)".
CartanPair make_pair(const std::string& name);
std::string pair_label(const CartanPair& pair);

/// Exact test of the pair's linear membership equations.
bool p_membership(const CartanPair& pair, const RationalMatrix& a);

/// Standard basis of the modelled subspace.
std::vector<RationalMatrix> p_basis(const CartanPair& pair);

/// Closed-form upper bound for square-identity families in the pair's
/// slot (the rho1 column of the table). Pairs without a table row report
/// nothing.
std::optional<long> rho1_table_bound(const CartanPair& pair);
std::optional<long> rho2_table_bound(const CartanPair& pair);

enum class WitnessClaim { CliffordRho1, NonsingularRho2 };

struct WitnessFamily {
  CartanPair pair;
  int n = 0;
  std::vector<RationalMatrix> mats;
  WitnessClaim claim = WitnessClaim::CliffordRho1;
};

/// Builds n matrices in the pair's slot with A_i A_j + A_j A_i =
/// 2 delta_ij I, exactly. Supported: so(N,N), gl(N,R), sl(2N,R). Requests
/// above the table bound raise TableBoundError.
WitnessFamily build_rho1_witness(const CartanPair& pair, int n);

struct ImpossibilityReport {
  long size = 0;
  bool impossible = true;
  std::string argument;
  long candidates_tested = 0;
  long violations = 0;
  uint64_t seed = 0;
};

/// Certifies that no traceless symmetric A with A^2 = I exists in odd
/// size M: the two eigenvalue multiplicities would have to be equal, which
/// the odd total forbids. A seeded randomized search over candidates
/// confirms each violates a constraint.
ImpossibilityReport odd_sl_impossibility(long m, uint64_t seed = 0,
                                         long candidates = 1000);

/// Single invertible traceless symmetric witness diag(1,...,1,-(M-1)).
WitnessFamily build_rho2_witness_odd_sl(long m);

struct WitnessCheckResult {
  bool ok = true;
  std::string failure;
  int i = 0, j = 0;  // failing pair for Clifford claims, 1-based
  std::string method;
  std::vector<Rational> counterexample;  // refuting combination, if any
};

/// Re-verifies a family against its claim: membership for every member,
/// then the exact Clifford identities or span nonsingularity.
WitnessCheckResult check_witness(const WitnessFamily& fam,
                                 long sampling_budget = 20000,
                                 uint64_t seed = 0);

/// Generator set used by the search-based estimators: the slot basis plus
/// any synthesized witness family.
std::vector<RationalMatrix> catalog_generators(const CartanPair& pair);

}  // namespace hr

#endif  // HR_CARTAN_HPP
