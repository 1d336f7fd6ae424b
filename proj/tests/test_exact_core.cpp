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
#include "skewloci/matrix.hpp"
#include "skewloci/rng.hpp"
#include "skewloci/skew.hpp"
#include "skewloci/subspace.hpp"

using namespace skewloci;

namespace {

SkewMatrix random_skew(SeededRng& rng, std::size_t n, long lo = -5,
                       long hi = 5) {
  return SkewMatrix::from_strict_upper(
      n, rng.uniform_int_vector(n * (n - 1) / 2, lo, hi));
}

// The 5x5 rank-4 example: a12 = a34 = 1, everything else forced.
SkewMatrix rank4_in_5() {
  RationalMatrix m(5, 5);
  m(0, 1) = 1;
  m(1, 0) = -1;
  m(2, 3) = 1;
  m(3, 2) = -1;
  return SkewMatrix(m);
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(rational_from_string("2/4") == make_rational(1, 2));
  CHECK(rational_from_string("-6/4") == make_rational(-3, 2));
  CHECK(to_string(rational_from_string("-6/4")) == "-3/2");
  CHECK(rational_from_string("0/7") == Rational(0));
  CHECK(to_string(Rational(0)) == "0");
  CHECK(make_rational(3, -6) == make_rational(-1, 2));  // positive denominator
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("a/2"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1.5"), ParseError);
  CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
}

TEST_CASE("rref on the stated cases") {
  SUBCASE("zero 3x3") {
    const auto res = rref(RationalMatrix(3, 3));
    CHECK(res.reduced == RationalMatrix(3, 3));
    CHECK(res.pivot_columns.empty());
  }
  SUBCASE("identity 4x4") {
    const auto res = rref(RationalMatrix::identity(4));
    CHECK(res.reduced == RationalMatrix::identity(4));
    CHECK(res.pivot_columns == std::vector<std::size_t>{0, 1, 2, 3});
  }
  SUBCASE("dependent rows") {
    const auto res = rref(RationalMatrix::from_rows({{1, 2}, {2, 4}}));
    CHECK(res.reduced == RationalMatrix::from_rows({{1, 2}, {0, 0}}));
    CHECK(res.pivot_columns == std::vector<std::size_t>{0});
  }
}

TEST_CASE("rref is idempotent and rank is transpose invariant") {
  SeededRng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(rng.uniform_int(0, 5));
    const std::size_t cols = 1 + static_cast<std::size_t>(rng.uniform_int(0, 5));
    RationalMatrix m(rows, cols,
                     rng.uniform_int_vector(rows * cols, -4, 4));
    const auto once = rref(m);
    const auto twice = rref(once.reduced);
    CHECK(once.reduced == twice.reduced);
    CHECK(once.pivot_columns == twice.pivot_columns);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rank on structured skew forms") {
  CHECK(rank(RationalMatrix(4, 4)) == 0);
  CHECK(rank(SkewMatrix::standard_symplectic(4).matrix()) == 4);
  CHECK(rank(rank4_in_5().matrix()) == 4);
}

TEST_CASE("kernel basics and exactness") {
  CHECK(kernel(RationalMatrix::identity(3)) == Subspace::zero_subspace(3));
  CHECK(kernel(RationalMatrix(4, 4)) == Subspace::full_space(4));

  const Subspace k = kernel(rank4_in_5().matrix());
  CHECK(k.dim() == 1);
  CHECK(k.basis() == RationalMatrix::from_rows({{0, 0, 0, 0, 1}}));

  SeededRng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(rng.uniform_int(0, 4));
    const std::size_t cols = 1 + static_cast<std::size_t>(rng.uniform_int(0, 5));
    RationalMatrix m(rows, cols, rng.uniform_int_vector(rows * cols, -4, 4));
    const Subspace ker = kernel(m);
    CHECK(ker.dim() == cols - rank(m));
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      const auto image = matvec(m, ker.basis().row(i));
      for (const Rational& q : image) CHECK(q == 0);
    }
  }
}

TEST_CASE("determinant matches cofactor expansion oracle") {
  SeededRng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform_int(0, 5));
    RationalMatrix m(n, n, rng.uniform_int_vector(n * n, -4, 4));
    CHECK(determinant(m) == oracles::cofactor_determinant(m));
  }
  CHECK(determinant(RationalMatrix::identity(6)) == 1);
}

TEST_CASE("pfaffian definition cases") {
  RationalMatrix two(2, 2);
  two(0, 1) = make_rational(7, 3);
  two(1, 0) = make_rational(-7, 3);
  CHECK(pfaffian(SkewMatrix(two)) == make_rational(7, 3));

  CHECK(pfaffian(SkewMatrix::standard_symplectic(4)) == 1);
  CHECK(pfaffian(SkewMatrix::standard_symplectic(6)) == 1);
  CHECK(pfaffian(SkewMatrix::zero(4)) == 0);

  CHECK_THROWS_AS(pfaffian(SkewMatrix::zero(3)), OddDimensionError);
}

TEST_CASE("pfaffian squared equals the determinant oracle") {
  SeededRng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const SkewMatrix s = random_skew(rng, 6);
    const Rational pf = pfaffian(s);
    CHECK(pf * pf == oracles::cofactor_determinant(s.matrix()));
  }
}

TEST_CASE("skew ranks are even and pf^2 = det across sizes") {
  SeededRng rng(99);
  int checked = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const SkewMatrix s = random_skew(rng, n);
      CHECK(rank(s.matrix()) % 2 == 0);
      if (n % 2 == 0) {
        const Rational pf = pfaffian(s);
        CHECK(pf * pf == determinant(s.matrix()));
        CHECK((pf != 0) == (rank(s.matrix()) == n));
      }
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("conformal factor") {
  const SkewMatrix j = SkewMatrix::standard_symplectic(4);

  CHECK(conformal_factor(RationalMatrix::identity(4), j) == Rational(1));

  const Rational c = make_rational(5, 2);
  CHECK(conformal_factor(RationalMatrix::identity(4) * c, j) == c * c);

  SUBCASE("transvections are symplectic") {
    SeededRng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<Rational> u = rng.uniform_nonzero_vector(4, -3, 3);
      const Rational coeff(rng.uniform_nonzero_int(-3, 3));
      const RationalMatrix t = symplectic_transvection(j, u, coeff);
      CHECK(t.transpose() * j.matrix() * t == j.matrix());
      CHECK(conformal_factor(t, j) == Rational(1));
    }
  }

  SUBCASE("a non-conformal matrix") {
    RationalMatrix g = RationalMatrix::identity(4);
    g(3, 3) = 2;  // scales one symplectic block only
    CHECK(!conformal_factor(g, j).has_value());
  }

  SUBCASE("size mismatch and degenerate form are rejected") {
    CHECK_THROWS_AS(conformal_factor(RationalMatrix::identity(2), j),
                    DimensionError);
    CHECK_THROWS_AS(conformal_factor(RationalMatrix::identity(4),
                                     SkewMatrix::zero(4)),
                    PreconditionError);
  }
}

TEST_CASE("random conformal symplectic generator") {
  SUBCASE("no steps, explicit scaling") {
    CHECK(random_conformal_symplectic(4, 0, 0, Rational(1)) ==
          RationalMatrix::identity(4));
    const RationalMatrix g = random_conformal_symplectic(4, 0, 0, Rational(3));
    CHECK(g == RationalMatrix::identity(4) * Rational(3));
    CHECK(conformal_factor(g, SkewMatrix::standard_symplectic(4)) ==
          Rational(9));
  }

  SUBCASE("seeded instance satisfies det g = tau^(r/2)") {
    const RationalMatrix g = random_conformal_symplectic(4, 42, 20);
    const auto tau = conformal_factor(g, SkewMatrix::standard_symplectic(4));
    REQUIRE(tau.has_value());
    CHECK(determinant(g) == (*tau) * (*tau));
    CHECK(g == random_conformal_symplectic(4, 42, 20));  // deterministic
    CHECK(g != random_conformal_symplectic(4, 43, 20));
  }

  SUBCASE("the identity holds across ranks and seeds") {
    for (std::size_t r : {2u, 4u, 6u}) {
      const SkewMatrix j = SkewMatrix::standard_symplectic(r);
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const RationalMatrix g = random_conformal_symplectic(r, seed, 8);
        const auto tau = conformal_factor(g, j);
        REQUIRE(tau.has_value());
        Rational expected = 1;
        for (std::size_t i = 0; i < r / 2; ++i) expected *= *tau;
        CHECK(determinant(g) == expected);
      }
    }
  }

  SUBCASE("odd size rejected") {
    CHECK_THROWS_AS(random_conformal_symplectic(3, 0, 0), OddDimensionError);
    CHECK_THROWS_AS(random_conformal_symplectic(4, 0, 0, Rational(0)),
                    PreconditionError);
  }
}
