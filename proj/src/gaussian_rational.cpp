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

#include "hr/gaussian_rational.hpp"

namespace hr {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = {1, 0};
  return m;
}

ComplexMatrix ComplexMatrix::from_parts(const RationalMatrix& re,
                                        const RationalMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols())
    throw std::invalid_argument("real and imaginary parts differ in shape");
  ComplexMatrix m(re.rows(), re.cols());
  for (int i = 0; i < re.rows(); ++i)
    for (int j = 0; j < re.cols(); ++j) m.at(i, j) = {re.at(i, j), im.at(i, j)};
  return m;
}

RationalMatrix ComplexMatrix::re_part() const {
  RationalMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).re;
  return m;
}

RationalMatrix ComplexMatrix::im_part() const {
  RationalMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).im;
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("complex matrix size mismatch in addition");
  ComplexMatrix m(a.rows_, a.cols_);
  for (size_t k = 0; k < m.entries_.size(); ++k)
    m.entries_[k] = a.entries_[k] + b.entries_[k];
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("complex matrix size mismatch in product");
  ComplexMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      GaussianRational acc;
      for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
      m.at(i, j) = acc;
    }
  return m;
}

ComplexMatrix operator*(const GaussianRational& s, const ComplexMatrix& a) {
  ComplexMatrix m(a.rows_, a.cols_);
  for (size_t k = 0; k < m.entries_.size(); ++k)
    m.entries_[k] = s * a.entries_[k];
  return m;
}

GaussianRational cdet(const ComplexMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("determinant of non-square complex matrix");
  const int n = a.rows();
  ComplexMatrix m = a;
  GaussianRational result{1, 0};
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!m.at(i, k).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return {0, 0};
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      result = GaussianRational{-1, 0} * result;
    }
    result = result * m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const GaussianRational f = m.at(i, k) / m.at(k, k);
      for (int j = k; j < n; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(k, j);
    }
  }
  return result;
}

RationalMatrix realify_matrix(const RationalMatrix& re,
                              const RationalMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols())
    throw std::invalid_argument("real and imaginary parts differ in shape");
  return block2x2(re, -im, im, re);
}

std::vector<Rational> realify_point(const std::vector<Rational>& re,
                                    const std::vector<Rational>& im) {
  if (re.size() != im.size())
    throw std::invalid_argument("real and imaginary parts differ in length");
  std::vector<Rational> out;
  out.reserve(2 * re.size());
  out.insert(out.end(), re.begin(), re.end());
  out.insert(out.end(), im.begin(), im.end());
  return out;
}

std::vector<std::pair<RationalMatrix, RationalMatrix>>
complex_hermitian_family(int m) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("family size must be odd and positive");
  using Pair = std::pair<RationalMatrix, RationalMatrix>;
  if (m == 1) {
    return {Pair{RationalMatrix::identity(1), RationalMatrix(1, 1)}};
  }
  const auto inner = complex_hermitian_family(m - 2);
  const int d = inner.front().first.rows();
  const RationalMatrix sx = RationalMatrix::from_rows({{0, 1}, {1, 0}});
  const RationalMatrix sz = RationalMatrix::from_rows({{1, 0}, {0, -1}});
  // sigma_y = [[0,-i],[i,0]]: purely imaginary.
  const RationalMatrix sy_im = RationalMatrix::from_rows({{0, -1}, {1, 0}});
  const RationalMatrix id = RationalMatrix::identity(d);
  std::vector<Pair> fam;
  fam.emplace_back(kron(sx, id), RationalMatrix(2 * d, 2 * d));
  fam.emplace_back(RationalMatrix(2 * d, 2 * d), kron(sy_im, id));
  for (const auto& [re, im] : inner)
    fam.emplace_back(kron(sz, re), kron(sz, im));
  return fam;
}

}  // namespace hr
