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

#include "hr/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace hr {

CliffordElement CliffordElement::scalar(CliffordSignature sig,
                                        const Rational& c) {
  CliffordElement e(sig);
  e.add_term(0, c);
  return e;
}

CliffordElement CliffordElement::generator(CliffordSignature sig, int i) {
  if (i < 1 || i > sig.generators())
    throw std::invalid_argument("generator index out of range");
  return blade(sig, 1u << (i - 1));
}

CliffordElement CliffordElement::blade(CliffordSignature sig, uint32_t mask,
                                       const Rational& c) {
  if (sig.generators() > 31 || (mask >> sig.generators()) != 0)
    throw std::invalid_argument("blade outside the algebra");
  CliffordElement e(sig);
  e.add_term(mask, c);
  return e;
}

Rational CliffordElement::coeff(uint32_t mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CliffordElement::add_term(uint32_t mask, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  if (!(a.sig_ == b.sig_))
    throw std::invalid_argument("signature mismatch in addition");
  CliffordElement r = a;
  for (const auto& [mask, c] : b.terms_) r.add_term(mask, c);
  return r;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  return a + Rational(-1) * b;
}

CliffordElement operator*(const Rational& s, const CliffordElement& a) {
  CliffordElement r(a.sig_);
  if (s == 0) return r;
  for (const auto& [mask, c] : a.terms_) r.terms_.emplace(mask, s * c);
  return r;
}

namespace {

// Sign from reordering the concatenated generator product of two blades
// into ascending order: for each generator in b, count the generators of a
// that must be hopped over.
int reorder_sign(uint32_t a, uint32_t b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

CliffordElement blade_mul(const CliffordElement& x, const CliffordElement& y) {
  if (!(x.signature() == y.signature()))
    throw std::invalid_argument("signature mismatch in product");
  const int p = x.signature().p;
  CliffordElement r(x.signature());
  for (const auto& [ma, ca] : x.terms()) {
    for (const auto& [mb, cb] : y.terms()) {
      int sign = reorder_sign(ma, mb);
      uint32_t common = ma & mb;
      while (common != 0) {
        const int idx = std::countr_zero(common);  // 0-based generator
        if (idx >= p) sign = -sign;
        common &= common - 1;
      }
      r.add_term(ma ^ mb, Rational(sign) * ca * cb);
    }
  }
  return r;
}

namespace {

RationalMatrix seed_x() { return RationalMatrix::from_rows({{0, 1}, {1, 0}}); }
RationalMatrix seed_z() {
  return RationalMatrix::from_rows({{1, 0}, {0, -1}});
}
RationalMatrix seed_j() {
  return RationalMatrix::from_rows({{0, 1}, {-1, 0}});
}

std::vector<RationalMatrix> build_skew(int n);

// n anticommuting symmetric square-+1 matrices. For n >= 2 the family is
// {X (x) I, Z (x) I} plus J tensored against a skew (n-2)-family.
std::vector<RationalMatrix> build_sym(int n) {
  if (n == 0) return {};
  if (n == 1) return {RationalMatrix::identity(1)};
  const auto skew = build_skew(n - 2);
  const int d = skew.empty() ? 1 : skew.front().rows();
  std::vector<RationalMatrix> fam;
  fam.push_back(kron(seed_x(), RationalMatrix::identity(d)));
  fam.push_back(kron(seed_z(), RationalMatrix::identity(d)));
  for (const auto& k : skew) fam.push_back(kron(seed_j(), k));
  return fam;
}

// Quaternion multiplication operators on R^4 as tensor products of the
// 2x2 seeds; left and right families commute with each other.
struct QuaternionOps {
  std::vector<RationalMatrix> left, right;
};

QuaternionOps quaternion_ops() {
  QuaternionOps q;
  const auto i2 = RationalMatrix::identity(2);
  q.left = {kron(i2, seed_j()), kron(seed_j(), seed_z())};
  q.left.push_back(q.left[0] * q.left[1]);
  q.right = {kron(seed_z(), seed_j()), kron(seed_j(), i2)};
  q.right.push_back(q.right[0] * q.right[1]);
  return q;
}

// The 7-element skew family on R^8.
std::vector<RationalMatrix> skew_seven() {
  const auto q = quaternion_ops();
  const auto i4 = RationalMatrix::identity(4);
  std::vector<RationalMatrix> fam;
  for (const auto& l : q.left) fam.push_back(kron(l, seed_z()));
  for (const auto& r : q.right) fam.push_back(kron(r, seed_x()));
  fam.push_back(kron(i4, seed_j()));
  return fam;
}

// n anticommuting skew square--1 matrices on the smallest dimension the
// recursion reaches: 2, 4, 4, 8, 8, 8, 8 for n = 1..7, then dimension
// x16 per additional 8 generators.
std::vector<RationalMatrix> build_skew(int n) {
  if (n == 0) return {};
  if (n == 1) return {seed_j()};
  if (n <= 3) {
    const std::vector<RationalMatrix> quat = {
        kron(seed_j(), RationalMatrix::identity(2)),
        kron(seed_x(), seed_j()), kron(seed_z(), seed_j())};
    return {quat.begin(), quat.begin() + n};
  }
  if (n <= 7) {
    auto fam = skew_seven();
    fam.resize(n);
    return fam;
  }
  // Doubling block: the seven-family plus one extra generator on R^16.
  std::vector<RationalMatrix> base;
  base.push_back(kron(seed_j(), RationalMatrix::identity(8)));
  for (const auto& k : skew_seven()) base.push_back(kron(seed_x(), k));
  // Volume element of the block: symmetric, squares to +1, anticommutes
  // with every block generator.
  RationalMatrix omega = RationalMatrix::identity(16);
  for (const auto& g : base) omega = omega * g;
  const auto rest = build_skew(n - 8);
  const int d = rest.empty() ? 1 : rest.front().rows();
  std::vector<RationalMatrix> fam;
  for (const auto& g : base) fam.push_back(kron(g, RationalMatrix::identity(d)));
  for (const auto& k : rest) fam.push_back(kron(omega, k));
  return fam;
}

}  // namespace

EpsilonFamily build_epsilon_family(int n, int epsilon) {
  if (n < 1) throw std::invalid_argument("family size must be >= 1");
  if (epsilon != 1 && epsilon != -1)
    throw std::invalid_argument("epsilon must be +1 or -1");
  EpsilonFamily fam;
  fam.epsilon = epsilon;
  fam.n = n;
  fam.matrices = epsilon == 1 ? build_sym(n) : build_skew(n);
  fam.dim = fam.matrices.front().rows();
  const auto check = verify_epsilon_family(fam);
  if (!check.ok)
    throw std::logic_error("family construction violated its relation: " +
                           check.message);
  return fam;
}

FamilyCheck verify_epsilon_family(const EpsilonFamily& fam) {
  const int n = static_cast<int>(fam.matrices.size());
  for (int i = 0; i < n; ++i) {
    const auto& ti = fam.matrices[i];
    if (!ti.is_square() || ti.rows() != fam.dim)
      return {.ok = false, .i = i + 1, .j = i + 1,
              .message = "matrix has wrong dimensions"};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const RationalMatrix anti =
          fam.matrices[i] * fam.matrices[j] + fam.matrices[j] * fam.matrices[i];
      const Rational want = (i == j) ? Rational(2 * fam.epsilon) : Rational(0);
      for (int r = 0; r < fam.dim; ++r)
        for (int c = 0; c < fam.dim; ++c) {
          const Rational expect = (r == c) ? want : Rational(0);
          if (anti.at(r, c) != expect)
            return {.ok = false, .i = i + 1, .j = j + 1, .row = r, .col = c,
                    .message = "anticommutator (" + std::to_string(i + 1) +
                               "," + std::to_string(j + 1) + ") entry (" +
                               std::to_string(r) + "," + std::to_string(c) +
                               ") = " + rat_str(anti.at(r, c)) +
                               ", expected " + rat_str(expect)};
        }
    }
  }
  return {};
}

CliffordRepresentation::CliffordRepresentation(EpsilonFamily fam)
    : fam_(std::move(fam)) {
  const auto check = verify_epsilon_family(fam_);
  if (!check.ok)
    throw std::invalid_argument("cannot extend an unverified family: " +
                                check.message);
}

CliffordSignature CliffordRepresentation::signature() const {
  return fam_.epsilon == 1 ? CliffordSignature{fam_.n, 0}
                           : CliffordSignature{0, fam_.n};
}

RationalMatrix CliffordRepresentation::operator()(
    const CliffordElement& x) const {
  if (!(x.signature() == signature()))
    throw std::invalid_argument("element signature does not match family");
  RationalMatrix acc(fam_.dim, fam_.dim);
  for (const auto& [mask, c] : x.terms()) {
    RationalMatrix prod = RationalMatrix::identity(fam_.dim);
    for (uint32_t m = mask; m != 0; m &= m - 1)
      prod = prod * fam_.matrices[std::countr_zero(m)];
    acc = acc + c * prod;
  }
  return acc;
}

}  // namespace hr
