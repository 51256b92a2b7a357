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

#ifndef HR_CLIFFORD_HPP
#define HR_CLIFFORD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hr/matrix.hpp"
#include "hr/rational.hpp"

namespace hr {

/// Signature of Cl(p,q): generators e_1..e_p square to +1, the remaining q
/// square to -1. The algebra has dimension 2^(p+q).
struct CliffordSignature {
  int p = 0;
  int q = 0;
  int generators() const { return p + q; }
  friend bool operator==(const CliffordSignature&,
                         const CliffordSignature&) = default;
};

/// Element of Cl(p,q) as a sparse signed blade expansion. A blade is the
/// bit set of its generator indices (bit i-1 for generator e_i); absent
/// blades carry coefficient 0.
class CliffordElement {
 public:
  explicit CliffordElement(CliffordSignature sig) : sig_(sig) {}
  static CliffordElement scalar(CliffordSignature sig, const Rational& c);
  /// Generator e_i, 1-based.
  static CliffordElement generator(CliffordSignature sig, int i);
  static CliffordElement blade(CliffordSignature sig, uint32_t mask,
                               const Rational& c = 1);

  const CliffordSignature& signature() const { return sig_; }
  const std::map<uint32_t, Rational>& terms() const { return terms_; }
  Rational coeff(uint32_t mask) const;
  void add_term(uint32_t mask, const Rational& c);

  friend CliffordElement operator+(const CliffordElement& a,
                                   const CliffordElement& b);
  friend CliffordElement operator-(const CliffordElement& a,
                                   const CliffordElement& b);
  friend CliffordElement operator*(const Rational& s,
                                   const CliffordElement& a);
  friend bool operator==(const CliffordElement& a,
                         const CliffordElement& b) = default;

 private:
  CliffordSignature sig_;
  std::map<uint32_t, Rational> terms_;
};

/// Product in Cl(p,q): bilinear extension of e_i^2 = +1 (i <= p),
/// e_i^2 = -1 (i > p), e_i e_j = -e_j e_i (i != j). Throws on a signature
/// mismatch.
CliffordElement blade_mul(const CliffordElement& x, const CliffordElement& y);

/// Real matrices T_1..T_n with T_i T_j + T_j T_i = 2 epsilon delta_ij I,
/// exactly. Construction keeps entries in {-1, 0, +1}.
struct EpsilonFamily {
  int epsilon = 1;  // +1 or -1
  int n = 0;
  int dim = 0;
  std::vector<RationalMatrix> matrices;
};

/// Builds an n-element family by the seeded tensor doubling recursion.
/// Every matrix is a signed permutation, symmetric for epsilon = +1 and
/// skew-symmetric for epsilon = -1. The relation is re-verified before
/// returning.
EpsilonFamily build_epsilon_family(int n, int epsilon);

struct FamilyCheck {
  bool ok = true;
  int i = 0, j = 0;      // 1-based indices of the first failing pair
  int row = 0, col = 0;  // offending entry of the anticommutator
  std::string message;
};

/// Checks all n^2 anticommutator identities exactly; reports the first
/// failure or success.
FamilyCheck verify_epsilon_family(const EpsilonFamily& fam);

/// The unique algebra map Cl -> matrices sending e_i to T_i, evaluated by
/// expanding blades as matrix products. The family is verified at
/// construction; an unverified family is rejected.
class CliffordRepresentation {
 public:
  explicit CliffordRepresentation(EpsilonFamily fam);

  /// Cl(n,0) for epsilon = +1, Cl(0,n) for epsilon = -1.
  CliffordSignature signature() const;
  const EpsilonFamily& family() const { return fam_; }
  RationalMatrix operator()(const CliffordElement& x) const;

 private:
  EpsilonFamily fam_;
};

}  // namespace hr

#endif  // HR_CLIFFORD_HPP
