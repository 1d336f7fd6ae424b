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

#include <cstdint>
#include <map>
#include <vector>

#include "skewloci/rational.hpp"

namespace skewloci::detail {

/// Sparse multivariate polynomial over Q with a fixed variable count.  Scale
/// is tiny (Pfaffian minors in <= 3 coefficients), so a term map is plenty.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly& operator+=(const MultiPoly& other);

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Max exponent of any single variable across terms.
  unsigned max_variable_degree() const;

 private:
  std::size_t nvars_;
  std::map<std::vector<unsigned>, Rational> terms_;
  void add_term(const std::vector<unsigned>& exps, const Rational& c);
};

/// Pfaffian of a skew matrix with polynomial entries, over the index subset
/// `mask`, memoized.  entry(i, j) must be the (i,j) entry for i < j.
MultiPoly symbolic_pfaffian(
    const std::vector<std::vector<MultiPoly>>& upper_entries,
    std::uint64_t mask, std::size_t nvars,
    std::map<std::uint64_t, MultiPoly>& memo);

}  // namespace skewloci::detail
