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
#include <optional>
#include <vector>

#include "skewloci/matrix.hpp"

namespace skewloci {

/// Square matrix with entry(i,j) = -entry(j,i); zero diagonal follows.
class SkewMatrix {
 public:
  /// Validates skewness; throws PreconditionError otherwise.
  explicit SkewMatrix(RationalMatrix m);

  static SkewMatrix zero(std::size_t n);

  /// Block-diagonal [[0,1],[-1,0]] symplectic form; throws OddDimensionError
  /// for odd n.  This is the standard form used throughout: all symplectic
  /// forms are linearly equivalent, and consumers needing another one pass it
  /// explicitly.
  static SkewMatrix standard_symplectic(std::size_t n);

  /// From the strict upper triangle listed row by row:
  /// (0,1),(0,2),...,(0,n-1),(1,2),...  Throws DimensionError on bad length.
  static SkewMatrix from_strict_upper(std::size_t n,
                                      const std::vector<Rational>& upper);

  std::size_t size() const { return matrix_.rows(); }
  const RationalMatrix& matrix() const { return matrix_; }
  const Rational& entry(std::size_t i, std::size_t j) const {
    return matrix_(i, j);
  }

  /// Strict upper triangle row by row (inverse of from_strict_upper).
  std::vector<Rational> strict_upper() const;

  bool operator==(const SkewMatrix& other) const = default;

 private:
  RationalMatrix matrix_;
};

/// Pfaffian by first-row expansion memoized on index subsets.  Exact; the
/// subset table makes sizes up to about n = 12 practical, which is the
/// intended scale.  pfaffian(S)^2 = det(S); nonzero iff S is nondegenerate.
/// Throws OddDimensionError for odd sizes.
Rational pfaffian(const SkewMatrix& s);

/// The factor tau with g^T J g = tau J, or nullopt if g is not conformal
/// with respect to J.  Requires J nondegenerate of even size matching g;
/// tau != 0 is forced when g is invertible.
std::optional<Rational> conformal_factor(const RationalMatrix& g,
                                         const SkewMatrix& j);

/// The transvection v -> v + c * J(v,u) * u, as a matrix.  Lies in the
/// symplectic group of J for every direction u and coefficient c.
RationalMatrix symplectic_transvection(const SkewMatrix& j,
                                       const std::vector<Rational>& direction,
                                       const Rational& coefficient);

/// Seed-deterministic element of the conformal symplectic group of the
/// standard form on Q^r: a product of `steps` random transvections (integer
/// parameters in [-3,3]) followed by a nonzero rational scaling.  The scaling
/// is drawn from the seed unless overridden.  Throws OddDimensionError for
/// odd r, PreconditionError for r < 2 or a zero override.
RationalMatrix random_conformal_symplectic(
    std::size_t r, std::uint64_t seed, std::size_t steps,
    std::optional<Rational> scaling = std::nullopt);

}  // namespace skewloci
