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

#include "skewloci/subspace.hpp"

#include <utility>

namespace skewloci {

Subspace Subspace::from_rows(std::size_t ambient, const RationalMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient) {
    throw DimensionError("row width does not match ambient dimension");
  }
  RrefResult res = rref(rows);
  const std::size_t dim = res.pivot_columns.size();
  RationalMatrix basis(dim, ambient);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = res.reduced(i, j);
  }
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::zero_subspace(std::size_t ambient) {
  return Subspace(ambient, RationalMatrix(0, ambient));
}

Subspace Subspace::full_space(std::size_t ambient) {
  return Subspace(ambient, RationalMatrix::identity(ambient));
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length mismatch");
  RationalMatrix row(1, ambient_, v);
  return rank(vertical_concat(basis_, row)) == dim();
}

Subspace kernel(const RationalMatrix& m) {
  const RrefResult res = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : res.pivot_columns) is_pivot[c] = true;

  RationalMatrix rows(n - res.pivot_columns.size(), n);
  std::size_t out_row = 0;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    rows(out_row, free_col) = 1;
    for (std::size_t k = 0; k < res.pivot_columns.size(); ++k) {
      rows(out_row, res.pivot_columns[k]) = -res.reduced(k, free_col);
    }
    ++out_row;
  }
  return Subspace::from_rows(n, rows);
}

bool meets_trivially(const Subspace& p, const Subspace& k) {
  if (p.ambient() != k.ambient()) {
    throw DimensionError("ambient dimensions differ");
  }
  return rank(vertical_concat(p.basis(), k.basis())) == p.dim() + k.dim();
}

Subspace lift_plus_K(const Subspace& p, const Subspace& k) {
  if (!meets_trivially(p, k)) {
    throw PreconditionError("subspace meets K nontrivially");
  }
  return Subspace::from_rows(p.ambient(),
                             vertical_concat(p.basis(), k.basis()));
}

}  // namespace skewloci
