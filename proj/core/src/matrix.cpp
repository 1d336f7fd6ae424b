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

#include "skewloci/matrix.hpp"

#include <utility>

namespace skewloci {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols,
                               std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("entry array length does not match rows*cols");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  RationalMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged row list");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& q : entries_) {
    if (q != 0) return false;
  }
  return true;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<long>(i * cols_),
          entries_.begin() + static_cast<long>((i + 1) * cols_)};
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("matrix sum shape mismatch");
  }
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] + other.entries_[i];
  }
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  return *this + (-other);
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = -entries_[i];
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionError("matrix product mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out(i, j) += a * other(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& scalar) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] * scalar;
  }
  return out;
}

RationalMatrix operator*(const Rational& scalar, const RationalMatrix& m) {
  return m * scalar;
}

std::vector<Rational> matvec(const RationalMatrix& m,
                            const std::vector<Rational>& v) {
  if (v.size() != m.cols()) throw DimensionError("matrix-vector mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

RationalMatrix vertical_concat(const RationalMatrix& top,
                               const RationalMatrix& bottom) {
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0) {
    throw DimensionError("vertical concat width mismatch");
  }
  const std::size_t cols = top.rows() != 0 ? top.cols() : bottom.cols();
  RationalMatrix out(top.rows() + bottom.rows(), cols);
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = top(i, j);
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(top.rows() + i, j) = bottom(i, j);
  }
  return out;
}

RationalMatrix horizontal_concat(const RationalMatrix& left,
                                 const RationalMatrix& right) {
  if (left.rows() != right.rows()) {
    throw DimensionError("horizontal concat height mismatch");
  }
  RationalMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) {
      out(i, left.cols() + j) = right(i, j);
    }
  }
  return out;
}

RrefResult rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::swap(a(sel, j), a(pivot_row, j));
      }
    }
    const Rational inv_pivot = Rational(1) / a(pivot_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(pivot_row, j) *= inv_pivot;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a(i, col) == 0) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        a(i, j) -= factor * a(pivot_row, j);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) {
  return rref(m).pivot_columns.size();
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col) == 0) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv_pivot = Rational(1) / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational factor = a(i, col) * inv_pivot;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RrefResult res = rref(horizontal_concat(m, RationalMatrix::identity(n)));
  if (res.pivot_columns.size() != n ||
      (n > 0 && res.pivot_columns.back() >= n)) {
    throw SingularMatrixError("matrix is singular");
  }
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.reduced(i, n + j);
  }
  return inv;
}

}  // namespace skewloci
