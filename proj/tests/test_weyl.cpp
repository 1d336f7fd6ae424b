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

#include "doctest.h"
#include "oracles.hpp"
#include "skewloci/weyl.hpp"

using namespace skewloci;

namespace {

QPolynomial poly(const std::vector<long>& c) {
  return QPolynomial::from_ints(c);
}

Integer factorial(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("q-polynomial arithmetic") {
  const QPolynomial one_plus_q = poly({1, 1});
  const QPolynomial one_minus_q = poly({1, -1});
  CHECK(one_plus_q * one_minus_q == poly({1, 0, -1}));
  CHECK(one_plus_q + one_minus_q == poly({2}));
  CHECK(one_plus_q - one_plus_q == QPolynomial());

  CHECK(poly({-1, 0, 1}).exact_div(poly({-1, 1})) == poly({1, 1}));
  CHECK_THROWS_AS(poly({1, 0, 1}).exact_div(poly({-1, 1})),
                  NotDivisibleError);
  CHECK_THROWS_AS(poly({1, 1}).exact_div(QPolynomial()), PreconditionError);

  CHECK(QPolynomial().degree() == -1);
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({1, 2, 1}).is_palindromic());
  CHECK(!poly({1, 2, 3}).is_palindromic());
  CHECK(poly({1, 2, 3}).value_at_one() == 6);
  CHECK(poly({2, 2}).exact_div(poly({2})) == poly({1, 1}));
  // remainder zero over Q but quotient not integral
  CHECK_THROWS_AS(poly({1, 2}).exact_div(poly({2})), NotDivisibleError);
}

TEST_CASE("degree lists") {
  CHECK(exponents_sl(2).degrees == std::vector<unsigned>{2});
  CHECK(exponents_sl(4).degrees == std::vector<unsigned>{2, 3, 4});
  CHECK(exponents_sp(4).degrees == std::vector<unsigned>{2, 4});
  CHECK(exponents_sp(0).degrees.empty());
  CHECK(exponents(GroupType::kA, 0).degrees.empty());
  CHECK(exponents(GroupType::kC, 1).degrees == std::vector<unsigned>{2});
  CHECK(exponents(GroupType::kC, 3).degrees == std::vector<unsigned>{2, 4, 6});
  CHECK_THROWS_AS(exponents_sp(5), PreconditionError);
  CHECK_THROWS_AS(exponents_sl(0), PreconditionError);
}

TEST_CASE("full flag polynomials against enumeration oracles") {
  CHECK(poincare_full_flag(std::vector<unsigned>{}) == QPolynomial::one());
  CHECK(poincare_full_flag({2}) == poly({1, 1}));

  SUBCASE("type A: cells counted by permutation inversions") {
    // S_3 by length is 1,2,2,1.
    const auto s3 = oracles::symmetric_group_by_length(3);
    CHECK(QPolynomial(s3) == poly({1, 2, 2, 1}));
    CHECK(poincare_full_flag({2, 3}) == QPolynomial(s3));
    for (unsigned k = 2; k <= 6; ++k) {
      CHECK(poincare_full_flag(exponents_sl(k)) ==
            QPolynomial(oracles::symmetric_group_by_length(k)));
    }
  }

  SUBCASE("type C: cells counted by Coxeter-graph distance") {
    // W(C_2) has 8 elements with length distribution 1,2,2,2,1.
    const auto c2 = oracles::hyperoctahedral_by_length(2);
    CHECK(QPolynomial(c2) == poly({1, 2, 2, 2, 1}));
    CHECK(poincare_full_flag({2, 4}) == QPolynomial(c2));
    for (unsigned n = 1; n <= 4; ++n) {
      CHECK(poincare_full_flag(exponents(GroupType::kC, n)) ==
            QPolynomial(oracles::hyperoctahedral_by_length(n)));
    }
  }

  SUBCASE("coefficient sum is the Weyl group order") {
    CHECK(poincare_full_flag(exponents_sl(5)).value_at_one() == factorial(5));
    CHECK(poincare_full_flag(exponents(GroupType::kC, 3)).value_at_one() ==
          48);  // 2^3 * 3!
  }
}

TEST_CASE("parabolic quotients") {
  SUBCASE("projective line") {
    CHECK(poincare_parabolic_quotient({exponents_sl(2)}, {}) == poly({1, 1}));
  }

  SUBCASE("2-planes in 4-space: A3 over A1 x A1") {
    const QPolynomial q = poincare_parabolic_quotient(
        {exponents_sl(4)}, {exponents_sl(2), exponents_sl(2)});
    CHECK(q == poly({1, 1, 2, 1, 1}));
    CHECK(q == QPolynomial(oracles::partitions_in_box(2, 2)));
    CHECK(q == poincare_grass2(4));
  }

  SUBCASE("isotropic 2-planes in 4-space: C2 over A1 x C0") {
    const QPolynomial q = poincare_parabolic_quotient(
        {exponents_sp(4)}, {exponents_sl(2), exponents_sp(0)});
    CHECK(q == poly({1, 1, 1, 1}));
    CHECK(q == poincare_isotropic_grass2(4));
  }

  SUBCASE("isotropic 2-planes in 6-space via BFS-built quotient") {
    const QPolynomial full = QPolynomial(oracles::hyperoctahedral_by_length(3));
    const QPolynomial levi = QPolynomial(oracles::symmetric_group_by_length(2)) *
                             QPolynomial(oracles::hyperoctahedral_by_length(1));
    CHECK(full.exact_div(levi) == poly({1, 1, 2, 2, 2, 2, 1, 1}));
    CHECK(poincare_isotropic_grass2(6) == poly({1, 1, 2, 2, 2, 2, 1, 1}));
  }

  SUBCASE("invalid Levi pairing is NotDivisible") {
    CHECK_THROWS_AS(poincare_parabolic_quotient({exponents_sl(3)},
                                                {exponents_sp(4)}),
                    NotDivisibleError);
  }
}

TEST_CASE("closed forms for 2-plane Grassmannians") {
  CHECK(poincare_grass2(4) == poly({1, 1, 2, 1, 1}));
  CHECK(poincare_grass2(2) == QPolynomial::one());
  CHECK(poincare_grass2(6) == QPolynomial(oracles::partitions_in_box(2, 4)));
  CHECK(poincare_isotropic_grass2(4) == poly({1, 1, 1, 1}));
  CHECK(poincare_isotropic_grass2(8).is_palindromic());

  CHECK_THROWS_AS(poincare_grass2(3), PreconditionError);
  CHECK_THROWS_AS(poincare_grass2(0), PreconditionError);
  CHECK_THROWS_AS(poincare_isotropic_grass2(2), PreconditionError);
  CHECK_THROWS_AS(poincare_isotropic_grass2(5), PreconditionError);
}

TEST_CASE("closed form equals exponent quotient for even r in [4,20]") {
  for (std::size_t r = 4; r <= 20; r += 2) {
    const unsigned ru = static_cast<unsigned>(r);
    const QPolynomial grass = poincare_grass2(r);
    CHECK(grass == poincare_parabolic_quotient(
                       {exponents_sl(ru)},
                       {exponents_sl(2), exponents_sl(ru - 2)}));
    CHECK(grass == QPolynomial(oracles::partitions_in_box(2, ru - 2)));
    CHECK(grass.is_palindromic());
    CHECK(grass.degree() == static_cast<int>(2 * r - 4));
    CHECK(grass.value_at_one() == Integer(r * (r - 1) / 2));

    const QPolynomial iso = poincare_isotropic_grass2(r);
    CHECK(iso == poincare_parabolic_quotient(
                     {exponents_sp(ru)},
                     {exponents_sl(2), exponents_sp(ru - 4)}));
    CHECK(iso.is_palindromic());
    CHECK(iso.degree() == static_cast<int>(2 * r - 5));
    CHECK(iso.value_at_one() == Integer(2 * (r / 2) * (r / 2 - 1)));
  }
}

TEST_CASE("bundle polynomials") {
  const QPolynomial p1 = poly({1, 1});
  const QPolynomial fiber = poincare_grass2(4);
  CHECK(poincare_bundle(QPolynomial::one(), fiber) == fiber);
  CHECK(poincare_bundle(p1, fiber) == poly({1, 2, 3, 3, 2, 1}));
}

TEST_CASE("top Betti numbers of Grassmannian bundles") {
  const BettiVector point{0, {1}};
  const BettiVector p1{1, {1, 0, 1}};
  const BettiVector empty{0, {0}};

  SUBCASE("point base, r = 4") {
    CHECK(top_betti_grass2_bundle(point, 4) == 2);
    CHECK(top_betti_isotropic_bundle(point, 4) == 1);
    // the complete-irreducible difference of exactly 1
    CHECK(top_betti_grass2_bundle(point, 4) -
              top_betti_isotropic_bundle(point, 4) ==
          1);
  }

  SUBCASE("P^1 base, r = 4, checked against the Kuenneth product") {
    CHECK(top_betti_grass2_bundle(p1, 4) == 3);
    CHECK(top_betti_isotropic_bundle(p1, 4) == 2);
    // homological degree 2d + 2r - 4 = 6 is the q^3 coefficient
    CHECK(poincare_bundle(poly({1, 1}), poincare_grass2(4)).coefficient(3) ==
          top_betti_grass2_bundle(p1, 4));
    CHECK(poincare_bundle(poly({1, 1}), poincare_isotropic_grass2(4))
              .coefficient(2) == top_betti_isotropic_bundle(p1, 4));
  }

  SUBCASE("zero base") {
    CHECK(top_betti_grass2_bundle(empty, 4) == 0);
    CHECK(top_betti_isotropic_bundle(empty, 4) == 0);
  }

  SUBCASE("point base reproduces the middle coefficient n") {
    for (std::size_t r = 2; r <= 12; r += 2) {
      CHECK(top_betti_grass2_bundle(point, r) == Integer(r / 2));
    }
  }

  SUBCASE("Kuenneth cross-check over seeded bases") {
    // bases with only even homology, given by their polynomial in q
    for (std::size_t r = 4; r <= 8; r += 2) {
      for (long d = 0; d <= 3; ++d) {
        std::vector<Integer> b(2 * d + 1, Integer(0));
        std::vector<Integer> base_poly(d + 1);
        for (long i = 0; i <= d; ++i) {
          base_poly[i] = Integer(1 + (i * 7 + d) % 3);
          b[2 * i] = base_poly[i];
        }
        const BettiVector betti{static_cast<std::size_t>(d), b};
        const QPolynomial product =
            poincare_bundle(QPolynomial(base_poly), poincare_grass2(r));
        CHECK(product.coefficient(static_cast<std::size_t>(d) + r - 2) ==
              top_betti_grass2_bundle(betti, r));
        const QPolynomial iso_product = poincare_bundle(
            QPolynomial(base_poly), poincare_isotropic_grass2(r));
        CHECK(iso_product.coefficient(static_cast<std::size_t>(d) + r - 3) ==
              top_betti_isotropic_bundle(betti, r));
      }
    }
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(top_betti_grass2_bundle(BettiVector{0, {}}, 4),
                    PreconditionError);
    CHECK_THROWS_AS(top_betti_grass2_bundle(BettiVector{0, {Integer(-1)}}, 4),
                    PreconditionError);
    CHECK_THROWS_AS(top_betti_grass2_bundle(point, 3), PreconditionError);
  }
}
