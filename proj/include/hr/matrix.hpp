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

#ifndef HR_MATRIX_HPP
#define HR_MATRIX_HPP

#include <optional>
#include <vector>

#include "hr/rational.hpp"

namespace hr {

/// Dense matrix over exact rationals, row-major storage. All operations are
/// pure; instances are safe to share across threads once constructed.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("negative matrix dimension");
  }

  static RationalMatrix identity(int n);
  static RationalMatrix diagonal(const std::vector<Rational>& d);
  /// Convenience for tests and builders: integer entries, row by row.
  static RationalMatrix from_rows(
      const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }
  Rational& at(int i, int j) {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }
  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix transpose() const;
  Rational trace() const;

  RationalMatrix operator-() const;
  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a,
                         const RationalMatrix& b) = default;

  std::vector<double> to_doubles() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact product; throws on an inner-dimension mismatch.
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
inline RationalMatrix operator*(const RationalMatrix& a,
                                const RationalMatrix& b) {
  return mat_mul(a, b);
}

std::vector<Rational> mat_vec(const RationalMatrix& a,
                              const std::vector<Rational>& x);

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// [[a, b], [c, d]] as one matrix; blocks must have matching edge sizes.
RationalMatrix block2x2(const RationalMatrix& a, const RationalMatrix& b,
                        const RationalMatrix& c, const RationalMatrix& d);

/// Exact determinant: cofactor expansion for n <= 3, fraction-free
/// (Bareiss) elimination on a denominator-cleared integer copy above that.
Rational det(const RationalMatrix& a);

int rank(const RationalMatrix& a);

/// Basis of the right null space, exact. Empty when the matrix has full
/// column rank.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& a);
std::optional<std::vector<Rational>> kernel_vector(const RationalMatrix& a);

bool is_symmetric(const RationalMatrix& a);
bool is_skew_symmetric(const RationalMatrix& a);
/// Exactly one nonzero entry per row and column, each in {-1, +1}.
bool is_signed_permutation(const RationalMatrix& a);
/// Sylvester criterion on leading principal minors, exact.
bool is_positive_definite(const RationalMatrix& a);

}  // namespace hr

#endif  // HR_MATRIX_HPP
