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

#include "skewloci/matrix.hpp"

namespace skewloci {

/// Linear subspace of Q^ambient held as its canonical basis: the nonzero rows
/// of the reduced row echelon form.  Canonicality makes operator== decide
/// subspace equality.
class Subspace {
 public:
  Subspace() = default;  // zero subspace of Q^0

  /// Canonicalizes arbitrary spanning rows (dependent rows dropped).
  /// Throws DimensionError if rows have the wrong width.
  static Subspace from_rows(std::size_t ambient, const RationalMatrix& rows);

  static Subspace zero_subspace(std::size_t ambient);
  static Subspace full_space(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }

  /// dim x ambient matrix in reduced row echelon form.
  const RationalMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;

  bool operator==(const Subspace& other) const = default;

 private:
  Subspace(std::size_t ambient, RationalMatrix canonical_basis)
      : ambient_(ambient), basis_(std::move(canonical_basis)) {}

  std::size_t ambient_ = 0;
  RationalMatrix basis_{0, 0};
};

/// Right kernel {v : M v = 0} in canonical form; dim = cols - rank.
Subspace kernel(const RationalMatrix& m);

/// True iff p and k intersect only in 0, i.e. the stacked bases have rank
/// dim p + dim k.  Throws DimensionError on ambient mismatch.
bool meets_trivially(const Subspace& p, const Subspace& k);

/// The sum p + k for p meeting k trivially; dimension dim p + dim k.
/// Throws PreconditionError on overlap.
Subspace lift_plus_K(const Subspace& p, const Subspace& k);

}  // namespace skewloci
