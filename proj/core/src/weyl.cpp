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

#include "skewloci/weyl.hpp"

#include <algorithm>
#include <cassert>

namespace skewloci {

ExponentList exponents(GroupType type, unsigned cartan_rank) {
  ExponentList out{type, cartan_rank, {}};
  out.degrees.reserve(cartan_rank);
  for (unsigned i = 1; i <= cartan_rank; ++i) {
    out.degrees.push_back(type == GroupType::kA ? i + 1 : 2 * i);
  }
  return out;
}

ExponentList exponents_sl(unsigned r) {
  if (r == 0) throw PreconditionError("sl_r needs r >= 1");
  return exponents(GroupType::kA, r - 1);
}

ExponentList exponents_sp(unsigned r) {
  if (r % 2 != 0) throw PreconditionError("sp_r needs even r");
  return exponents(GroupType::kC, r / 2);
}

QPolynomial poincare_full_flag(const std::vector<unsigned>& degrees) {
  QPolynomial numerator = QPolynomial::one();
  for (unsigned d : degrees) {
    numerator = numerator * (QPolynomial::monomial(1, d) - QPolynomial::one());
  }
  const QPolynomial q_minus_1 =
      QPolynomial::monomial(1, 1) - QPolynomial::one();
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    // Divisibility is a theorem for genuine degree lists.
    numerator = numerator.exact_div(q_minus_1);
  }
  return numerator;
}

QPolynomial poincare_full_flag(const ExponentList& exponents) {
  return poincare_full_flag(exponents.degrees);
}

std::vector<unsigned> combined_degrees(
    const std::vector<ExponentList>& factors) {
  std::vector<unsigned> out;
  for (const ExponentList& f : factors) {
    out.insert(out.end(), f.degrees.begin(), f.degrees.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

QPolynomial poincare_parabolic_quotient(const std::vector<ExponentList>& group,
                                        const std::vector<ExponentList>& levi) {
  const QPolynomial top = poincare_full_flag(combined_degrees(group));
  const QPolynomial bottom = poincare_full_flag(combined_degrees(levi));
  return top.exact_div(bottom);
}

namespace {

// Shared coefficient pattern of the two closed forms: ascent 1,1,2,2,...
// capped at `cap`, palindromic of degree `top`.
QPolynomial capped_staircase(std::size_t top, std::size_t cap) {
  std::vector<Integer> c(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t up = k / 2 + 1;
    const std::size_t down = (top - k) / 2 + 1;
    c[k] = Integer(std::min({up, down, cap}));
  }
  return QPolynomial(std::move(c));
}

}  // namespace

QPolynomial poincare_grass2(std::size_t r) {
  if (r % 2 != 0 || r < 2) {
    throw PreconditionError("2-plane Grassmannian needs even r >= 2");
  }
  const std::size_t n = r / 2;
  return capped_staircase(2 * r - 4, n);
}

QPolynomial poincare_isotropic_grass2(std::size_t r) {
  if (r % 2 != 0 || r < 4) {
    throw PreconditionError("isotropic 2-plane Grassmannian needs even r >= 4");
  }
  const std::size_t n = r / 2;
  return capped_staircase(2 * r - 5, n - 1);
}

QPolynomial poincare_bundle(const QPolynomial& base, const QPolynomial& fiber) {
  return base * fiber;
}

void validate_betti(const BettiVector& betti) {
  if (betti.b.empty()) throw PreconditionError("Betti vector must be nonempty");
  for (const Integer& v : betti.b) {
    if (v < 0) throw PreconditionError("Betti numbers must be nonnegative");
  }
}

namespace {

Integer betti_at(const BettiVector& betti, long i) {
  if (i < 0 || static_cast<std::size_t>(i) >= betti.b.size()) return 0;
  return betti.b[static_cast<std::size_t>(i)];
}

}  // namespace

Integer top_betti_grass2_bundle(const BettiVector& betti, std::size_t r) {
  if (r % 2 != 0 || r < 2) {
    throw PreconditionError("even r >= 2 required");
  }
  validate_betti(betti);
  // Kuenneth at homological degree 2d + 2r - 4: fiber coefficients read
  // descending from degree 2r-4 of the fiber polynomial down to the middle
  // degree r-2, against b_{2d}, b_{2d-2}, ...
  const QPolynomial fiber = poincare_grass2(r);
  const long d2 = 2 * static_cast<long>(betti.d);
  Integer sum = 0;
  for (std::size_t j = 0; j + 2 <= r; ++j) {
    sum += fiber.coefficient(r - 2 + j) * betti_at(betti, d2 - 2 * static_cast<long>(j));
  }
  return sum;
}

Integer top_betti_isotropic_bundle(const BettiVector& betti, std::size_t r) {
  if (r % 2 != 0 || r < 4) {
    throw PreconditionError("even r >= 4 required");
  }
  validate_betti(betti);
  return top_betti_grass2_bundle(betti, r) -
         betti_at(betti, 2 * static_cast<long>(betti.d));
}

}  // namespace skewloci
