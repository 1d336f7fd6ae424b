/*
 * Copyright 2026 The skewloci authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "skewloci/errors.hpp"
#include "skewloci/rational.hpp"

namespace skewloci {

/// Dense matrix of exact rationals, row-major.  Values are immutable in
/// practice: all operations return new matrices.
class RationalMatrix {
 public:
  RationalMatrix() = default;

  /// Zero-filled rows × cols matrix.
  RationalMatrix(std::size_t rows, std::size_t cols);

  /// From a row-major entry array; throws DimensionError on length mismatch.
  RationalMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);

  /// Convenience for literals in tests and fixtures.
  static RationalMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  const std::vector<Rational>& entries() const { return entries_; }

  std::vector<Rational> row(std::size_t i) const;

  RationalMatrix transpose() const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator*(const Rational& scalar) const;
  RationalMatrix operator-() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const Rational& scalar, const RationalMatrix& m);

/// Matrix–vector product (vector as column).
std::vector<Rational> matvec(const RationalMatrix& m,
                            const std::vector<Rational>& v);

RationalMatrix vertical_concat(const RationalMatrix& top,
                               const RationalMatrix& bottom);
RationalMatrix horizontal_concat(const RationalMatrix& left,
                                 const RationalMatrix& right);

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form and pivot columns.  The RREF is the unique
/// canonical representative, so two matrices have equal row space iff their
/// nonzero RREF rows agree.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Exact determinant by fraction-tracking Gaussian elimination.
/// Throws DimensionError if not square.
Rational determinant(const RationalMatrix& m);

/// Throws SingularMatrixError when no inverse exists.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace skewloci
