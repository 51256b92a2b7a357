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

#include "hr/matrix.hpp"

#include <algorithm>

namespace hr {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
  const int n = static_cast<int>(d.size());
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational s = 0;
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix m(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
  return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix size mismatch in addition");
  RationalMatrix m(a.rows_, a.cols_);
  for (size_t k = 0; k < m.entries_.size(); ++k)
    m.entries_[k] = a.entries_[k] + b.entries_[k];
  return m;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix size mismatch in subtraction");
  RationalMatrix m(a.rows_, a.cols_);
  for (size_t k = 0; k < m.entries_.size(); ++k)
    m.entries_[k] = a.entries_[k] - b.entries_[k];
  return m;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix m(a.rows_, a.cols_);
  for (size_t k = 0; k < m.entries_.size(); ++k)
    m.entries_[k] = s * a.entries_[k];
  return m;
}

std::vector<double> RationalMatrix::to_doubles() const {
  std::vector<double> d(entries_.size());
  for (size_t k = 0; k < entries_.size(); ++k) d[k] = entries_[k].get_d();
  return d;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix size mismatch in product");
  RationalMatrix m(a.rows(), b.cols());
  Rational acc;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
      m.at(i, j) = acc;
    }
  }
  return m;
}

std::vector<Rational> mat_vec(const RationalMatrix& a,
                              const std::vector<Rational>& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Rational acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

RationalMatrix block2x2(const RationalMatrix& a, const RationalMatrix& b,
                        const RationalMatrix& c, const RationalMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols())
    throw std::invalid_argument("incompatible block sizes");
  RationalMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < c.cols(); ++j) m.at(a.rows() + i, j) = c.at(i, j);
    for (int j = 0; j < d.cols(); ++j)
      m.at(a.rows() + i, a.cols() + j) = d.at(i, j);
  }
  return m;
}

namespace {

Rational det_cofactor(const RationalMatrix& a) {
  const int n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a.at(0, 0);
  if (n == 2) return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
  // n == 3
  return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
         a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
         a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

// Bareiss elimination on an integer matrix. Intermediate entries stay
// divisible by the previous pivot, so every division is exact.
Integer det_bareiss(std::vector<std::vector<Integer>>& m) {
  const int n = static_cast<int>(m.size());
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          r = i;
          break;
        }
      if (r < 0) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace

Rational det(const RationalMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("determinant of non-square matrix");
  const int n = a.rows();
  if (n <= 3) return det_cofactor(a);

  // Clear denominators row by row, track the total scale.
  std::vector<std::vector<Integer>> z(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (int i = 0; i < n; ++i) {
    Integer l = 1;
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), l.get_mpz_t(),
                   a.at(i, j).get_den().get_mpz_t());
      z[i][j] = a.at(i, j).get_num() * q;
    }
    scale *= l;
  }
  return rat(det_bareiss(z), scale);
}

namespace {

// Row echelon pass used for rank and null-space extraction. Returns the
// eliminated matrix together with the pivot column of each pivot row.
std::vector<int> eliminate(std::vector<std::vector<Rational>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows > 0 ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

std::vector<std::vector<Rational>> to_grid(const RationalMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(),
                                       std::vector<Rational>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
  return m;
}

}  // namespace

int rank(const RationalMatrix& a) {
  auto m = to_grid(a);
  return static_cast<int>(eliminate(m).size());
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& a) {
  auto m = to_grid(a);
  const auto pivots = eliminate(m);
  const int cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> kernel_vector(const RationalMatrix& a) {
  auto basis = null_space(a);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

bool is_symmetric(const RationalMatrix& a) {
  if (!a.is_square()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (a.at(i, j) != a.at(j, i)) return false;
  return true;
}

bool is_skew_symmetric(const RationalMatrix& a) {
  if (!a.is_square()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i; j < a.cols(); ++j)
      if (a.at(i, j) != -a.at(j, i)) return false;
  return true;
}

bool is_signed_permutation(const RationalMatrix& a) {
  if (!a.is_square()) return false;
  const int n = a.rows();
  std::vector<int> col_hits(n, 0);
  for (int i = 0; i < n; ++i) {
    int row_hits = 0;
    for (int j = 0; j < n; ++j) {
      const Rational& e = a.at(i, j);
      if (e == 0) continue;
      if (e != 1 && e != -1) return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(),
                     [](int h) { return h == 1; });
}

bool is_positive_definite(const RationalMatrix& a) {
  if (!is_symmetric(a)) return false;
  for (int k = 1; k <= a.rows(); ++k) {
    RationalMatrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = a.at(i, j);
    if (det(lead) <= 0) return false;
  }
  return true;
}

}  // namespace hr
