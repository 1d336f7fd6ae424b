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
#include "skewloci/json_io.hpp"
#include "skewloci/rng.hpp"

using namespace skewloci;
using nlohmann::json;

TEST_CASE("matrix wire format") {
  const json j = json::parse(R"({
    "rows": 2, "cols": 2,
    "entries": [["1/2", "-3"], ["0", "7/5"]]
  })");
  const RationalMatrix m = matrix_from_json(j);
  CHECK(m(0, 0) == make_rational(1, 2));
  CHECK(m(1, 1) == make_rational(7, 5));
  CHECK(matrix_from_json(to_json(m)) == m);

  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"cols":1,"entries":[["1"]]})")),
                  ParseError);
}

TEST_CASE("polynomial wire format") {
  const QPolynomial p = QPolynomial::from_ints({1, 0, -3});
  CHECK(to_json(p) == json::parse(R"(["1","0","-3"])"));
  CHECK(qpolynomial_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(qpolynomial_from_json(json::parse(R"(["1/2"])")), ParseError);
}

TEST_CASE("subspace wire format round trips canonically") {
  SeededRng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform_int(0, 4));
    const std::size_t rows = 1 + static_cast<std::size_t>(rng.uniform_int(0, 2));
    const Subspace s = Subspace::from_rows(
        n, RationalMatrix(rows, n, rng.uniform_int_vector(rows * n, -4, 4)));
    CHECK(subspace_from_json(to_json(s)) == s);
  }
}

TEST_CASE("skew space wire format") {
  const json j = json::parse(R"({
    "N": 4,
    "basis": [["1","0","0","0","0","0"], ["0","0","0","0","0","1"]]
  })");
  const SkewLinearSpace space = skew_space_from_json(j);
  CHECK(space.matrix_size() == 4);
  CHECK(space.dim() == 2);
  CHECK(space.basis()[0].entry(0, 1) == 1);
  CHECK(space.basis()[1].entry(2, 3) == 1);

  const json again = to_json(space);
  const SkewLinearSpace back = skew_space_from_json(again);
  CHECK(back.basis() == space.basis());

  // dependent basis is a parse-level rejection
  CHECK_THROWS_AS(skew_space_from_json(json::parse(
                      R"({"N":4,"basis":[["1","0","0","0","0","0"],
                                          ["2","0","0","0","0","0"]]})")),
                  ParseError);
  // wrong triangle length
  CHECK_THROWS_AS(skew_space_from_json(json::parse(
                      R"({"N":4,"basis":[["1","0"]]})")),
                  ParseError);
}

TEST_CASE("Lie algebra wire format") {
  const json j = json::parse(R"({
    "name": "sl2", "dim": 3, "basis": ["e", "f", "h"],
    "brackets": [
      {"i": 0, "j": 1, "out": {"2": "1"}},
      {"i": 0, "j": 2, "out": {"0": "-2"}},
      {"i": 1, "j": 2, "out": {"1": "2"}}
    ]
  })");
  const LieAlgebraPresentation algebra = lie_from_json(j);
  CHECK(!validate(algebra).has_value());
  CHECK(algebra.structure_constant(0, 1, 2) == 1);
  CHECK(algebra.structure_constant(1, 0, 2) == -1);
  CHECK(algebra.structure_constant(2, 0, 0) == 2);

  const LieAlgebraPresentation back =
      lie_from_json(to_json(algebra, "sl2"));
  CHECK(back.basis_names() == algebra.basis_names());
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      CHECK(back.basis_bracket(a, b) == algebra.basis_bracket(a, b));
    }
  }
}

TEST_CASE("Lie algebra wire format rejects redundancy") {
  // i >= j
  CHECK_THROWS_AS(lie_from_json(json::parse(R"({
    "name": "x", "dim": 2, "basis": ["a", "b"],
    "brackets": [{"i": 1, "j": 0, "out": {"0": "1"}}]
  })")),
                  ParseError);
  // duplicate pair
  CHECK_THROWS_AS(lie_from_json(json::parse(R"({
    "name": "x", "dim": 2, "basis": ["a", "b"],
    "brackets": [{"i": 0, "j": 1, "out": {"0": "1"}},
                 {"i": 0, "j": 1, "out": {"0": "2"}}]
  })")),
                  ParseError);
  // out-of-range output index
  CHECK_THROWS_AS(lie_from_json(json::parse(R"({
    "name": "x", "dim": 2, "basis": ["a", "b"],
    "brackets": [{"i": 0, "j": 1, "out": {"5": "1"}}]
  })")),
                  ParseError);
}

TEST_CASE("covector wire format") {
  const Covector lambda{Rational(0), make_rational(-1, 2), Rational(3)};
  CHECK(covector_from_json(covector_to_json(lambda)) == lambda);
  CHECK_THROWS_AS(covector_from_json(json::parse(R"(["x"])")), ParseError);
}
