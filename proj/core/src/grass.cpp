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

#include "skewloci/grass.hpp"

#include <utility>

namespace skewloci {

Subspace project_from(const Subspace& p, const RationalMatrix& rho) {
  if (rho.cols() != p.ambient()) {
    throw DimensionError("projection source dimension mismatch");
  }
  if (rank(rho) != rho.rows()) {
    throw PreconditionError("projection map must be surjective");
  }
  const Subspace image =
      Subspace::from_rows(rho.rows(), p.basis() * rho.transpose());
  if (image.dim() != p.dim()) {
    throw DegenerateProjectionError("subspace meets the kernel: dimension drops");
  }
  return image;
}

Rational restrict_skew_form(const SkewMatrix& j, const Subspace& p) {
  if (p.dim() != 2) throw DimensionError("restriction needs a 2-plane");
  if (p.ambient() != j.size()) throw DimensionError("ambient mismatch");
  const std::vector<Rational> jb2 = matvec(j.matrix(), p.basis().row(1));
  const std::vector<Rational> b1 = p.basis().row(0);
  Rational value = 0;
  for (std::size_t i = 0; i < b1.size(); ++i) value += b1[i] * jb2[i];
  return value;
}

QuotientForm induced_form_on_quotient(const SkewMatrix& j) {
  const std::size_t n = j.size();
  const Subspace radical = kernel(j.matrix());
  const std::size_t k = radical.dim();
  const std::size_t r = n - k;

  // Canonical complement: the non-pivot coordinates of the radical's RREF
  // basis span a complement of K (a K-combination supported there has zero
  // pivot coordinates, hence zero coefficients).
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t col = 0;
    while (radical.basis()(i, col) == 0) ++col;
    is_pivot[col] = true;
  }
  std::vector<std::size_t> complement;
  complement.reserve(r);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) complement.push_back(c);
  }

  // v = (K part) + (complement part); rho reads off the complement
  // coordinates: rho = bottom r rows of T^{-1} where T's columns are the K
  // basis followed by the complement unit vectors.
  RationalMatrix t(n, n);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < n; ++i) t(i, c) = radical.basis()(c, i);
  }
  for (std::size_t c = 0; c < r; ++c) t(complement[c], k + c) = 1;
  const RationalMatrix t_inv = inverse(t);

  RationalMatrix rho(r, n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t col = 0; col < n; ++col) rho(i, col) = t_inv(k + i, col);
  }

  RationalMatrix section(n, r);
  for (std::size_t c = 0; c < r; ++c) section(complement[c], c) = 1;

  // The form descends to the quotient because K is its radical; on the
  // complement coordinates it is just the corresponding submatrix.
  RationalMatrix sub(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      sub(a, b) = j.entry(complement[a], complement[b]);
    }
  }
  return QuotientForm{std::move(rho), SkewMatrix(std::move(sub)), radical,
                      std::move(section)};
}

std::size_t fiber_dimension_of_projection(std::size_t n, std::size_t r,
                                          std::size_t s) {
  if (s > r || r > n) throw PreconditionError("need s <= r <= N");
  return s * (n - r);
}

SectionMap canonical_section(const RationalMatrix& rho) {
  const std::size_t r = rho.rows();
  const std::size_t n = rho.cols();
  // Solve rho * f = I with free coordinates zero: rref the augmented system
  // [rho | I]; for pivot row k with pivot column p_k, f(p_k, i) is the
  // reduced right-hand side.
  const RrefResult res = rref(horizontal_concat(rho, RationalMatrix::identity(r)));
  std::size_t pivots_in_rho = 0;
  for (std::size_t c : res.pivot_columns) {
    if (c < n) ++pivots_in_rho;
  }
  if (pivots_in_rho != r) {
    throw PreconditionError("section requires a surjective map");
  }
  RationalMatrix f(n, r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t pivot_col = res.pivot_columns[k];
    for (std::size_t i = 0; i < r; ++i) f(pivot_col, i) = res.reduced(k, n + i);
  }
  return SectionMap{std::move(f)};
}

bool is_section(const RationalMatrix& rho, const RationalMatrix& f) {
  if (f.rows() != rho.cols() || f.cols() != rho.rows()) return false;
  return rho * f == RationalMatrix::identity(rho.rows());
}

namespace {

// Coordinates of a vector of K in K's RREF basis: read off at pivot columns.
std::vector<Rational> radical_coordinates(const Subspace& k,
                                          const std::vector<Rational>& v) {
  std::vector<Rational> coords(k.dim());
  for (std::size_t i = 0; i < k.dim(); ++i) {
    std::size_t col = 0;
    while (k.basis()(i, col) == 0) ++col;
    coords[i] = v[col];
  }
  return coords;
}

}  // namespace

std::optional<RationalMatrix> fiber_membership_witness(
    const Subspace& q, const Subspace& p, const RationalMatrix& rho,
    const Subspace& k) {
  const std::size_t n = rho.cols();
  const std::size_t r = rho.rows();
  if (p.ambient() != n || q.ambient() != r || k.ambient() != n) {
    throw DimensionError("inconsistent ambient dimensions");
  }
  if (q.dim() != p.dim()) {
    throw DimensionError("plane dimensions differ");
  }
  if (kernel(rho) != k) {
    throw PreconditionError("K must be the kernel of the projection");
  }
  if (!meets_trivially(p, k)) return std::nullopt;
  if (project_from(p, rho) != q) return std::nullopt;

  const SectionMap section = canonical_section(rho);
  const std::size_t s = q.dim();
  RationalMatrix h(s, k.dim());

  // For each canonical basis vector w of q: the unique v in p over w is
  // v = c^T B_p with (B_p rho^T)^T c = w; then h(w) = v - section(w) lies
  // in K and is read off in K's canonical coordinates.
  const RationalMatrix a = (p.basis() * rho.transpose()).transpose();  // r x s
  for (std::size_t i = 0; i < s; ++i) {
    const std::vector<Rational> w = q.basis().row(i);
    RationalMatrix rhs(r, 1, w);
    const RrefResult solved = rref(horizontal_concat(a, rhs));
    // a has full column rank s, so the first s pivot rows give c.
    std::vector<Rational> c(s);
    for (std::size_t row = 0; row < s; ++row) c[row] = solved.reduced(row, s);
    std::vector<Rational> v(n);
    for (std::size_t idx = 0; idx < s; ++idx) {
      for (std::size_t col = 0; col < n; ++col) {
        v[col] += c[idx] * p.basis()(idx, col);
      }
    }
    const std::vector<Rational> lift = matvec(section.f, w);
    for (std::size_t col = 0; col < n; ++col) v[col] -= lift[col];
    const std::vector<Rational> coords = radical_coordinates(k, v);
    for (std::size_t col = 0; col < k.dim(); ++col) h(i, col) = coords[col];
  }
  return h;
}

Subspace fiber_point_from_witness(const Subspace& q, const RationalMatrix& h,
                                  const RationalMatrix& rho,
                                  const Subspace& k) {
  const std::size_t n = rho.cols();
  const std::size_t s = q.dim();
  if (h.rows() != s || h.cols() != k.dim()) {
    throw DimensionError("witness has wrong shape");
  }
  const SectionMap section = canonical_section(rho);
  RationalMatrix rows(s, n);
  for (std::size_t i = 0; i < s; ++i) {
    const std::vector<Rational> lift = matvec(section.f, q.basis().row(i));
    for (std::size_t col = 0; col < n; ++col) {
      rows(i, col) = lift[col];
      for (std::size_t kk = 0; kk < k.dim(); ++kk) {
        rows(i, col) += h(i, kk) * k.basis()(kk, col);
      }
    }
  }
  return Subspace::from_rows(n, rows);
}

RationalMatrix assemble_block(const ChartBlock& block) {
  const std::size_t nk = block.alpha.rows();
  const std::size_t r = block.gamma.rows();
  if (!block.alpha.is_square() || !block.gamma.is_square() ||
      block.m.rows() != nk || block.m.cols() != r) {
    throw DimensionError("chart block shapes are inconsistent");
  }
  RationalMatrix out(nk + r, nk + r);
  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = 0; j < nk; ++j) out(i, j) = block.alpha(i, j);
    for (std::size_t j = 0; j < r; ++j) out(i, nk + j) = block.m(i, j);
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) out(nk + i, nk + j) = block.gamma(i, j);
  }
  return out;
}

ChartBlock compose(const ChartBlock& second, const ChartBlock& first) {
  return ChartBlock{second.alpha * first.alpha, second.gamma * first.gamma,
                    second.alpha * first.m + second.m * first.gamma};
}

RationalMatrix chart_transition_action(const ChartBlock& block,
                                       const RationalMatrix& f) {
  const std::size_t nk = block.alpha.rows();
  const std::size_t r = block.gamma.rows();
  if (f.rows() != nk || f.cols() != r) {
    throw DimensionError("graph coordinate has wrong shape");
  }
  const RationalMatrix gamma_inv = inverse(block.gamma);
  if (rank(block.alpha) != nk) {
    throw SingularMatrixError("alpha block is singular");
  }
  const RationalMatrix result =
      block.alpha * f * gamma_inv + block.m * gamma_inv;

  // Cross-check against the geometric route: apply the assembled block to the
  // graph [f; I] and renormalize the bottom to the identity.
  const RationalMatrix graph =
      vertical_concat(f, RationalMatrix::identity(r));
  const RationalMatrix moved = assemble_block(block) * graph * gamma_inv;
  RationalMatrix top(nk, r);
  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = 0; j < r; ++j) top(i, j) = moved(i, j);
  }
  if (top != result) {
    throw Error("chart transition: formula and block geometry disagree");
  }
  return result;
}

}  // namespace skewloci
