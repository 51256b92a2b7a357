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

#include "hr/polynomial.hpp"

#include <algorithm>

namespace hr {

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t k = 0; k < c.size(); ++k) {
    if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
    if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> c(a.coeffs_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = s * a.coeffs_[k];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(
    const Polynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot;
  const int dd = d.degree();
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    const int k = static_cast<int>(rem.size()) - 1 - dd;
    const Rational f = rem.back() / d.leading();
    if (static_cast<int>(quot.size()) < k + 1) quot.resize(k + 1);
    quot[k] = f;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= f * d.coeffs_[j];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) break;
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

// Scales to integer coefficients with content 1. The scale factor is
// positive, so the sign of the polynomial at every point is preserved
// (what the Sturm variation counts rely on).
Polynomial primitive_scaled(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer l = 1;
  for (const auto& c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> z;
  z.reserve(p.coeffs().size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    z.push_back(c.get_num() * q);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  std::vector<Rational> out(z.size());
  for (size_t k = 0; k < z.size(); ++k) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), z[k].get_mpz_t(), g.get_mpz_t());
    out[k] = Rational(q);
  }
  return Polynomial(std::move(out));
}

std::vector<Polynomial> sturm_chain(const Polynomial& squarefree) {
  std::vector<Polynomial> chain;
  chain.push_back(primitive_scaled(squarefree));
  Polynomial d = squarefree.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive_scaled(d));
  while (true) {
    const auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
    if (r.is_zero()) break;
    chain.push_back(primitive_scaled(Rational(-1) * r));
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

enum class Endpoint { MinusInf, PlusInf, Finite };

int sign_at(const Polynomial& p, Endpoint e, const Rational& x) {
  if (p.is_zero()) return 0;
  switch (e) {
    case Endpoint::Finite:
      return sgn(p.eval(x));
    case Endpoint::PlusInf:
      return sgn(p.leading());
    case Endpoint::MinusInf:
      return p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading());
  }
  return 0;
}

int variations(const std::vector<Polynomial>& chain, Endpoint e,
               const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, e, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = primitive_scaled(a);
  Polynomial y = primitive_scaled(b);
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = primitive_scaled(r);
  }
  return x;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(1);
  const Polynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return primitive_scaled(p);
  return primitive_scaled(p.divmod(g).first);
}

int count_real_roots(const Polynomial& p, const Interval& iv) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (p.degree() == 0) return 0;
  const Polynomial q = squarefree_part(p);
  const auto chain = sturm_chain(q);

  const Rational zero = 0;
  const int v_lo = iv.lo ? variations(chain, Endpoint::Finite, *iv.lo)
                         : variations(chain, Endpoint::MinusInf, zero);
  const int v_hi = iv.hi ? variations(chain, Endpoint::Finite, *iv.hi)
                         : variations(chain, Endpoint::PlusInf, zero);
  // V(lo) - V(hi) counts distinct roots in the half-open cell (lo, hi].
  int count = v_lo - v_hi;
  if (iv.lo && iv.lo_closed && q.eval(*iv.lo) == 0) ++count;
  if (iv.hi && !iv.hi_closed && q.eval(*iv.hi) == 0) --count;
  return count;
}

namespace {

// Divisors of |n| found by trial division; empty when |n| resists at the
// cutoff (then rational-root recovery is skipped).
std::vector<Integer> small_divisors(Integer n, unsigned long cutoff) {
  std::vector<Integer> divs{1};
  n = abs(n);
  if (n == 0) return divs;
  for (unsigned long f = 2; Integer(f) * f <= n; ++f) {
    if (f > cutoff) return {};
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), f);
      ++e;
    }
    if (e == 0) continue;
    const size_t base = divs.size();
    Integer pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= f;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
    if (divs.size() > 4096) return {};
  }
  if (n > 1) {
    const size_t base = divs.size();
    for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * n);
  }
  return divs;
}

std::optional<Rational> rational_root(const Polynomial& q_primitive) {
  const auto& c = q_primitive.coeffs();
  if (q_primitive.eval(0) == 0) return Rational(0);
  const Integer a0 = c.front().get_num();
  const Integer ad = c.back().get_num();
  const auto ps = small_divisors(a0, 1000000);
  const auto qs = small_divisors(ad, 1000000);
  if (ps.empty() || qs.empty()) return std::nullopt;
  for (const auto& num : ps)
    for (const auto& den : qs) {
      Rational cand = rat(num, den);
      if (q_primitive.eval(cand) == 0) return cand;
      cand = -cand;
      if (q_primitive.eval(cand) == 0) return cand;
    }
  return std::nullopt;
}

}  // namespace

std::optional<RootCertificate> isolate_real_root(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  Polynomial q = squarefree_part(p);
  if (q.degree() < 1) return std::nullopt;
  if (q.degree() == 1)
    return RootCertificate{.exact_root = -q.coeffs()[0] / q.coeffs()[1]};
  if (count_real_roots(q) == 0) return std::nullopt;

  if (auto r = rational_root(q)) return RootCertificate{.exact_root = *r};

  // Cauchy bound: all real roots lie in [-B, B].
  Rational b = 0;
  for (int k = 0; k < q.degree(); ++k)
    b = std::max(b, Rational(abs(q.coeffs()[k] / q.leading())));
  b += 1;

  Rational lo = -b - 1;
  Rational hi = b;
  auto roots_in = [&](const Rational& a, const Rational& c) {
    return count_real_roots(q, Interval{.lo = a, .hi = c});
  };
  for (int iter = 0; iter < 512; ++iter) {
    if (roots_in(lo, hi) == 1 && q.eval(lo) != 0 && q.eval(hi) != 0 &&
        sgn(q.eval(lo)) != sgn(q.eval(hi)))
      return RootCertificate{.interval = std::make_pair(lo, hi)};
    const Rational mid = (lo + hi) / 2;
    if (q.eval(mid) == 0) return RootCertificate{.exact_root = mid};
    if (roots_in(lo, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  throw std::logic_error("root isolation failed to converge");
}

Polynomial char_poly(const RationalMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("characteristic polynomial of non-square");
  const int n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m = RationalMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    const RationalMatrix am = a * m;
    const Rational ck = -am.trace() / k;
    c[n - k] = ck;
    m = am + ck * RationalMatrix::identity(n);
  }
  return Polynomial(std::move(c));
}

Polynomial lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
  Polynomial acc;
  for (size_t i = 0; i < points.size(); ++i) {
    Polynomial basis = Polynomial::constant(1);
    Rational denom = 1;
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial({-points[j].first, 1});
      denom *= points[i].first - points[j].first;
    }
    if (denom == 0) throw std::invalid_argument("repeated interpolation node");
    acc = acc + (points[i].second / denom) * basis;
  }
  return acc;
}

}  // namespace hr
