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
#include <string>
#include <vector>

#include "skewloci/errors.hpp"
#include "skewloci/rational.hpp"

namespace skewloci {

/// Univariate polynomial in the formal variable q with integer coefficients,
/// constant term first, trailing zeros trimmed.
class QPolynomial {
 public:
  QPolynomial() = default;  // the zero polynomial
  explicit QPolynomial(std::vector<Integer> coefficients);

  static QPolynomial constant(Integer value);
  static QPolynomial one() { return constant(1); }
  /// coefficient * q^degree
  static QPolynomial monomial(Integer coefficient, std::size_t degree);
  static QPolynomial from_ints(const std::vector<long>& coefficients);

  bool is_zero() const { return coefficients_.empty(); }
  /// Degree, with the convention degree(0) = -1.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  /// Coefficient of q^i (zero beyond the degree).
  Integer coefficient(std::size_t i) const;
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  QPolynomial operator+(const QPolynomial& other) const;
  QPolynomial operator-(const QPolynomial& other) const;
  QPolynomial operator*(const QPolynomial& other) const;

  /// Exact quotient; throws NotDivisibleError unless the remainder is zero
  /// and the quotient has integer coefficients.  A NotDivisibleError from a
  /// group-theoretic context signals a bug or bad input, never a value.
  QPolynomial exact_div(const QPolynomial& divisor) const;

  Integer value_at_one() const;
  bool is_palindromic() const;

  std::string to_pretty_string() const;

  bool operator==(const QPolynomial& other) const = default;

 private:
  std::vector<Integer> coefficients_;
  void trim();
};

}  // namespace skewloci
