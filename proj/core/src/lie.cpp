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

#include "skewloci/lie.hpp"

#include <sstream>
#include <utility>

#include "skewloci/rng.hpp"
#include "skewloci/subspace.hpp"

namespace skewloci {

std::size_t LieAlgebraPresentation::pair_index(std::size_t i,
                                               std::size_t j) const {
  // (i,j) with i < j, row-by-row over the strict upper triangle.
  const std::size_t n = dim();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

LieAlgebraPresentation::LieAlgebraPresentation(
    std::vector<std::string> basis_names,
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>
        brackets)
    : names_(std::move(basis_names)) {
  const std::size_t n = dim();
  c_.assign(n * (n - 1) / 2, std::vector<Rational>(n));
  for (const auto& [pair, value] : brackets) {
    const auto [i, j] = pair;
    if (i >= j || j >= n) {
      throw PreconditionError("bracket keys must satisfy i < j < dim");
    }
    if (value.size() != n) {
      throw DimensionError("bracket value has wrong length");
    }
    c_[pair_index(i, j)] = value;
  }
}

LieAlgebraPresentation LieAlgebraPresentation::abelian(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return LieAlgebraPresentation(std::move(names), {});
}

LieAlgebraPresentation LieAlgebraPresentation::from_basis_matrices(
    std::vector<std::string> basis_names,
    const std::vector<RationalMatrix>& basis) {
  const std::size_t n = basis.size();
  if (basis_names.size() != n) {
    throw PreconditionError("one name per basis matrix required");
  }
  if (n == 0) return LieAlgebraPresentation({}, {});
  const std::size_t d = basis[0].rows();
  // Flattened basis for exact coordinate solves.
  RationalMatrix flat(n, d * d);
  for (std::size_t t = 0; t < n; ++t) {
    if (basis[t].rows() != d || basis[t].cols() != d) {
      throw PreconditionError("representation matrices must share one size");
    }
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) flat(t, a * d + b) = basis[t](a, b);
    }
  }
  if (rank(flat) != n) {
    throw PreconditionError("representation matrices are dependent");
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>
      brackets;
  const RationalMatrix flat_t = flat.transpose();  // d^2 x n
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const RationalMatrix lie = basis[i] * basis[j] - basis[j] * basis[i];
      RationalMatrix target(d * d, 1);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) target(a * d + b, 0) = lie(a, b);
      }
      const RrefResult solved = rref(horizontal_concat(flat_t, target));
      // Consistency: the augmented column must not become a pivot.
      for (std::size_t c : solved.pivot_columns) {
        if (c == n) {
          throw PreconditionError("bracket leaves the span of the basis");
        }
      }
      std::vector<Rational> coords(n);
      for (std::size_t row = 0; row < solved.pivot_columns.size(); ++row) {
        coords[solved.pivot_columns[row]] = solved.reduced(row, n);
      }
      bool nonzero = false;
      for (const Rational& q : coords) nonzero = nonzero || q != 0;
      if (nonzero) brackets.emplace(std::make_pair(i, j), std::move(coords));
    }
  }
  return LieAlgebraPresentation(std::move(basis_names), std::move(brackets));
}

Rational LieAlgebraPresentation::structure_constant(std::size_t i,
                                                    std::size_t j,
                                                    std::size_t k) const {
  if (i == j) return Rational(0);
  if (i < j) return c_[pair_index(i, j)][k];
  return -c_[pair_index(j, i)][k];
}

std::vector<Rational> LieAlgebraPresentation::basis_bracket(
    std::size_t i, std::size_t j) const {
  std::vector<Rational> out(dim());
  if (i == j) return out;
  const std::vector<Rational>& stored = c_[pair_index(std::min(i, j),
                                                      std::max(i, j))];
  for (std::size_t k = 0; k < dim(); ++k) {
    out[k] = i < j ? stored[k] : -stored[k];
  }
  return out;
}

std::vector<Rational> LieAlgebraPresentation::bracket(
    const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionError("bracket arguments have wrong length");
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational factor = x[i] * y[j] - x[j] * y[i];
      if (factor == 0) continue;
      const std::vector<Rational>& cij = c_[pair_index(i, j)];
      for (std::size_t k = 0; k < n; ++k) {
        if (cij[k] != 0) out[k] += factor * cij[k];
      }
    }
  }
  return out;
}

std::optional<JacobiFailure> validate(const LieAlgebraPresentation& algebra) {
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Rational residual = 0;
          for (std::size_t m = 0; m < n; ++m) {
            residual += algebra.structure_constant(i, j, m) *
                        algebra.structure_constant(m, k, l);
            residual += algebra.structure_constant(j, k, m) *
                        algebra.structure_constant(m, i, l);
            residual += algebra.structure_constant(k, i, m) *
                        algebra.structure_constant(m, j, l);
          }
          if (residual != 0) {
            return JacobiFailure{i, j, k, l, residual};
          }
        }
      }
    }
  }
  return std::nullopt;
}

SkewMatrix omega_matrix(const LieAlgebraPresentation& algebra,
                        const Covector& lambda) {
  const std::size_t n = algebra.dim();
  if (lambda.size() != n) throw DimensionError("covector has wrong length");
  RationalMatrix omega(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational value = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational c = algebra.structure_constant(i, j, k);
        if (c != 0) value += c * lambda[k];
      }
      omega(i, j) = value;
      omega(j, i) = -value;
    }
  }
  return SkewMatrix(std::move(omega));
}

std::size_t orbit_dimension(const LieAlgebraPresentation& algebra,
                            const Covector& lambda) {
  return rank(omega_matrix(algebra, lambda).matrix());
}

namespace {

// Dual basis covectors plus all pairwise sums and differences; minimal
// orbits tend to sit on coordinate covectors, so these come before any
// random sampling.
std::vector<Covector> structured_covectors(std::size_t n) {
  std::vector<Covector> out;
  for (std::size_t i = 0; i < n; ++i) {
    Covector e(n);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Covector plus(n), minus(n);
      plus[i] = 1;
      plus[j] = 1;
      minus[i] = 1;
      minus[j] = -1;
      out.push_back(std::move(plus));
      out.push_back(std::move(minus));
    }
  }
  return out;
}

}  // namespace

MinOrbitResult min_nonzero_orbit_dim(const LieAlgebraPresentation& algebra,
                                     std::uint64_t seed, std::size_t samples) {
  const std::size_t n = algebra.dim();
  if (samples < n) throw PreconditionError("need samples >= dim");

  std::vector<Covector> points = structured_covectors(n);
  SeededRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    points.push_back(rng.uniform_nonzero_vector(n, -5, 5));
  }

  MinOrbitResult result;
  result.r = 2 * n;  // above any possible rank
  for (const Covector& lambda : points) {
    const std::size_t dim = orbit_dimension(algebra, lambda);
    if (dim < result.r) {
      result.r = dim;
      result.witness = lambda;
      if (dim == 0) break;  // cannot go lower
    }
  }
  std::ostringstream note;
  note << "minimum over " << points.size()
       << " nonzero covectors (dual basis, pairwise sums/differences, seeded "
          "random); an upper bound on the true minimum, exact for the "
          "catalog algebras";
  result.confidence = note.str();
  return result;
}

OrbitBoundReport check_min_orbit_bound(const LieAlgebraPresentation& algebra,
                                       std::size_t r) {
  OrbitBoundReport report;
  report.n = algebra.dim();
  report.r = r;
  report.bound = 2 * ((2 * report.n + 1) / 6);
  report.slack = static_cast<long>(report.bound) - static_cast<long>(r);
  report.holds = report.slack >= 0;
  report.tight = report.slack == 0;
  return report;
}

std::map<std::size_t, HistogramEntry> rank_stratification_histogram(
    const LieAlgebraPresentation& algebra, std::uint64_t seed,
    std::size_t samples) {
  const std::size_t n = algebra.dim();
  std::vector<Covector> points;
  points.emplace_back(n);  // the zero covector, included once
  for (Covector& v : structured_covectors(n)) points.push_back(std::move(v));
  SeededRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    points.push_back(rng.uniform_nonzero_vector(n, -5, 5));
  }

  std::map<std::size_t, HistogramEntry> histogram;
  for (const Covector& lambda : points) {
    const std::size_t dim = orbit_dimension(algebra, lambda);
    auto [it, inserted] = histogram.try_emplace(dim);
    if (inserted) it->second.example = lambda;
    ++it->second.count;
  }
  return histogram;
}

namespace {

RationalMatrix unit_matrix(std::size_t d, std::size_t a, std::size_t b) {
  RationalMatrix m(d, d);
  m(a, b) = 1;
  return m;
}

LieAlgebraPresentation make_heisenberg3() {
  return LieAlgebraPresentation::from_basis_matrices(
      {"x", "y", "z"},
      {unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)});
}

LieAlgebraPresentation make_affine_line() {
  return LieAlgebraPresentation::from_basis_matrices(
      {"e1", "e2"}, {unit_matrix(2, 0, 1), -unit_matrix(2, 0, 0)});
}

std::vector<RationalMatrix> sl2_matrices() {
  const RationalMatrix e = unit_matrix(2, 0, 1);
  const RationalMatrix f = unit_matrix(2, 1, 0);
  const RationalMatrix h = unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1);
  return {e, f, h};
}

LieAlgebraPresentation make_sl2() {
  return LieAlgebraPresentation::from_basis_matrices({"e", "f", "h"},
                                                     sl2_matrices());
}

LieAlgebraPresentation make_so3() {
  // [x,y] = z and cyclically.
  const RationalMatrix x = unit_matrix(3, 2, 1) - unit_matrix(3, 1, 2);
  const RationalMatrix y = unit_matrix(3, 0, 2) - unit_matrix(3, 2, 0);
  const RationalMatrix z = unit_matrix(3, 1, 0) - unit_matrix(3, 0, 1);
  return LieAlgebraPresentation::from_basis_matrices({"x", "y", "z"},
                                                     {x, y, z});
}

LieAlgebraPresentation make_sl2xsl2() {
  std::vector<RationalMatrix> basis;
  for (int block = 0; block < 2; ++block) {
    for (const RationalMatrix& m : sl2_matrices()) {
      RationalMatrix big(4, 4);
      const std::size_t off = 2 * static_cast<std::size_t>(block);
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) big(off + a, off + b) = m(a, b);
      }
      basis.push_back(std::move(big));
    }
  }
  return LieAlgebraPresentation::from_basis_matrices(
      {"e1", "f1", "h1", "e2", "f2", "h2"}, basis);
}

LieAlgebraPresentation make_sl3() {
  std::vector<RationalMatrix> basis = {
      unit_matrix(3, 0, 1), unit_matrix(3, 0, 2), unit_matrix(3, 1, 2),
      unit_matrix(3, 1, 0), unit_matrix(3, 2, 0), unit_matrix(3, 2, 1),
      unit_matrix(3, 0, 0) - unit_matrix(3, 1, 1),
      unit_matrix(3, 1, 1) - unit_matrix(3, 2, 2)};
  return LieAlgebraPresentation::from_basis_matrices(
      {"e12", "e13", "e23", "e21", "e31", "e32", "h1", "h2"}, basis);
}

LieAlgebraPresentation make_sp4() {
  // X = [[A, B], [C, -A^T]] with B, C symmetric 2x2.
  std::vector<RationalMatrix> basis;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      RationalMatrix m(4, 4);
      m(a, b) = 1;
      m(2 + b, 2 + a) = -1;
      basis.push_back(std::move(m));
      names.push_back("a" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  const auto sym_slots = {std::make_pair(0, 0), std::make_pair(0, 1),
                          std::make_pair(1, 1)};
  for (const auto& [a, b] : sym_slots) {
    RationalMatrix m(4, 4);
    m(a, 2 + b) = 1;
    m(b, 2 + a) = 1;
    basis.push_back(std::move(m));
    names.push_back("b" + std::to_string(a + 1) + std::to_string(b + 1));
  }
  for (const auto& [a, b] : sym_slots) {
    RationalMatrix m(4, 4);
    m(2 + a, b) = 1;
    m(2 + b, a) = 1;
    basis.push_back(std::move(m));
    names.push_back("c" + std::to_string(a + 1) + std::to_string(b + 1));
  }
  return LieAlgebraPresentation::from_basis_matrices(std::move(names), basis);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"abelian3", LieAlgebraPresentation::abelian(3), 0, false,
                     {0}, 3, "every covector is fixed, so the 0-stratum is "
                     "all of the dual space"});
  entries.push_back({"heisenberg3", make_heisenberg3(), 0, false, {0, 2}, 2,
                     "fixed covectors are those vanishing on the center, a "
                     "hyperplane"});
  entries.push_back({"affine-line", make_affine_line(), 0, true, {0, 2}, 1,
                     "fixed covectors vanish on the derived line; bound "
                     "2*floor(5/6) = 0 makes r = 0 trivially tight"});
  entries.push_back({"sl2", make_sl2(), 2, true, {0, 2}, 3,
                     "no nonzero fixed covectors (semisimple), so the "
                     "2-stratum is everything: dim 3 = 2(3-2)+1 exactly"});
  entries.push_back({"so3", make_so3(), 2, true, {0, 2}, 3,
                     "as for sl2: nonzero covectors all have 2-dimensional "
                     "orbits"});
  entries.push_back({"sl2xsl2", make_sl2xsl2(), 2, false, {0, 2, 4}, 3,
                     "orbit dim <= 2 means one factor component vanishes: "
                     "two 3-planes"});
  entries.push_back({"sl3", make_sl3(), 4, true, {0, 4, 6}, 5,
                     "orbit dim <= 4 is the irregular locus, codimension 3 "
                     "in dimension 8"});
  entries.push_back({"sp4", make_sp4(), 4, false, {0, 4, 6, 8}, 4,
                     "orbit dim <= 4 is the closure of the minimal nilpotent "
                     "orbit, dimension 4"});
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

}  // namespace skewloci
