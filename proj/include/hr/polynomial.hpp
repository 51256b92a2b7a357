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

#ifndef HR_POLYNOMIAL_HPP
#define HR_POLYNOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hr/matrix.hpp"
#include "hr/rational.hpp"

namespace hr {

/// Univariate polynomial over exact rationals, coefficients in ascending
/// degree. The zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }
  static Polynomial constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division: returns {quotient, remainder}. Divisor must be
  /// nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p divided by gcd(p, p'); same distinct real roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Interval of the real line; absent bounds mean +/- infinity. Bounds are
/// open unless the matching *_closed flag is set.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = false;
  bool hi_closed = false;
  static Interval whole_line() { return {}; }
};

/// Number of distinct real roots of p in the interval, decided by Sturm
/// sign variations in exact arithmetic. Throws on the zero polynomial.
int count_real_roots(const Polynomial& p,
                     const Interval& iv = Interval::whole_line());

/// Witness for one real root: either an exact rational root, or an
/// interval [lo, hi] on which the squarefree part changes sign.
struct RootCertificate {
  std::optional<Rational> exact_root;
  std::optional<std::pair<Rational, Rational>> interval;
};

/// Finds one real root if any exist. Exact rational roots are recovered
/// via the rational-root candidates of the primitive squarefree part;
/// otherwise bisection narrows to a sign-change interval.
std::optional<RootCertificate> isolate_real_root(const Polynomial& p);

/// det(tI - A) as an exact polynomial (Faddeev-LeVerrier recursion).
Polynomial char_poly(const RationalMatrix& a);

/// Unique polynomial of degree < points.size() through the given nodes;
/// the x values must be pairwise distinct.
Polynomial lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace hr

#endif  // HR_POLYNOMIAL_HPP
