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

#include "skewloci/qpolynomial.hpp"

#include <algorithm>
#include <utility>

namespace skewloci {

QPolynomial::QPolynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void QPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

QPolynomial QPolynomial::constant(Integer value) {
  return QPolynomial(std::vector<Integer>{std::move(value)});
}

QPolynomial QPolynomial::monomial(Integer coefficient, std::size_t degree) {
  std::vector<Integer> c(degree + 1);
  c[degree] = std::move(coefficient);
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::from_ints(const std::vector<long>& coefficients) {
  std::vector<Integer> c(coefficients.begin(), coefficients.end());
  return QPolynomial(std::move(c));
}

Integer QPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Integer(0);
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
  std::vector<Integer> c(std::max(coefficients_.size(),
                                  other.coefficients_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = coefficient(i) + other.coefficient(i);
  }
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& other) const {
  std::vector<Integer> c(std::max(coefficients_.size(),
                                  other.coefficients_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = coefficient(i) - other.coefficient(i);
  }
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  if (is_zero() || other.is_zero()) return QPolynomial();
  std::vector<Integer> c(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      c[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::exact_div(const QPolynomial& divisor) const {
  if (divisor.is_zero()) {
    throw PreconditionError("division by the zero polynomial");
  }
  if (is_zero()) return QPolynomial();
  if (degree() < divisor.degree()) {
    throw NotDivisibleError("degree of dividend below divisor");
  }
  // Long division over Q, then an integrality check on the quotient.
  std::vector<Rational> rem(coefficients_.begin(), coefficients_.end());
  const std::size_t qlen =
      coefficients_.size() - divisor.coefficients_.size() + 1;
  std::vector<Rational> quot(qlen);
  const Rational lead(divisor.coefficients_.back());
  for (std::size_t step = qlen; step-- > 0;) {
    const Rational factor = rem[step + divisor.coefficients_.size() - 1] / lead;
    quot[step] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < divisor.coefficients_.size(); ++j) {
      rem[step + j] -= factor * Rational(divisor.coefficients_[j]);
    }
  }
  for (const Rational& q : rem) {
    if (q != 0) throw NotDivisibleError("nonzero remainder");
  }
  std::vector<Integer> out(qlen);
  for (std::size_t i = 0; i < qlen; ++i) {
    if (quot[i].get_den() != 1) {
      throw NotDivisibleError("quotient has non-integer coefficients");
    }
    out[i] = quot[i].get_num();
  }
  return QPolynomial(std::move(out));
}

Integer QPolynomial::value_at_one() const {
  Integer sum = 0;
  for (const Integer& c : coefficients_) sum += c;
  return sum;
}

bool QPolynomial::is_palindromic() const {
  const std::size_t n = coefficients_.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (coefficients_[i] != coefficients_[n - 1 - i]) return false;
  }
  return true;
}

std::string QPolynomial::to_pretty_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    if (!out.empty()) out += coefficients_[i] > 0 ? " + " : " - ";
    const Integer a = out.empty() ? coefficients_[i] : abs(coefficients_[i]);
    if (i == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace skewloci
