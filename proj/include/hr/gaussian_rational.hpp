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

#ifndef HR_GAUSSIAN_RATIONAL_HPP
#define HR_GAUSSIAN_RATIONAL_HPP

#include <vector>

#include "hr/matrix.hpp"
#include "hr/rational.hpp"

namespace hr {

/// Exact complex rational re + im*i.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    if (b.is_zero()) throw std::invalid_argument("complex division by zero");
    const Rational n2 = b.norm2();
    const GaussianRational num = a * b.conj();
    return {num.re / n2, num.im / n2};
  }
  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;
};

/// Dense matrix over exact complex rationals.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}
  static ComplexMatrix identity(int n);
  /// re + i*im from two real matrices of equal shape.
  static ComplexMatrix from_parts(const RationalMatrix& re,
                                  const RationalMatrix& im);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const GaussianRational& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }
  GaussianRational& at(int i, int j) {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  RationalMatrix re_part() const;
  RationalMatrix im_part() const;

  friend ComplexMatrix operator+(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator*(const GaussianRational& s,
                                 const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> entries_;
};

/// Exact determinant over the Gaussian rationals (elimination with exact
/// division).
GaussianRational cdet(const ComplexMatrix& a);

/// The standard embedding A + iB -> [[A, -B], [B, A]] of complex N x N
/// matrices into real 2N x 2N matrices.
RationalMatrix realify_matrix(const RationalMatrix& re,
                              const RationalMatrix& im);

/// The point map x + iy -> (x; y) matching realify_matrix.
std::vector<Rational> realify_point(const std::vector<Rational>& re,
                                    const std::vector<Rational>& im);

/// Hermitian anticommuting square-identity complex family of odd size m on
/// dimension 2^((m-1)/2), returned as (re, im) pairs.
std::vector<std::pair<RationalMatrix, RationalMatrix>>
complex_hermitian_family(int m);

}  // namespace hr

#endif  // HR_GAUSSIAN_RATIONAL_HPP
