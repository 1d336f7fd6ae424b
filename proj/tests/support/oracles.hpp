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

// Independent oracles for the test suite.  Everything here recomputes
// expected values through a different route than the library: cofactor
// expansion instead of elimination, Coxeter-graph breadth-first search and
// permutation counting instead of product formulas, and a from-scratch
// Jacobi evaluator.  Keep it that way.

#include <cstddef>
#include <map>
#include <vector>

#include "skewloci/lie.hpp"
#include "skewloci/matrix.hpp"

namespace skewloci::oracles {

/// Determinant by memoized cofactor expansion along the first remaining row.
Rational cofactor_determinant(const RationalMatrix& m);

/// Coefficients of sum_{w in S_k} q^{inv(w)} (type-A full flag cells).
std::vector<Integer> symmetric_group_by_length(unsigned k);

/// Coefficients of sum_w q^{l(w)} over the hyperoctahedral group W(C_n),
/// lengths from breadth-first search over the Coxeter generators
/// (adjacent transpositions plus the sign flip on the last coordinate).
std::vector<Integer> hyperoctahedral_by_length(unsigned n);

/// Number of partitions of each size fitting in a rows x cols box
/// (Schubert cell counts of the (rows)-plane Grassmannian in rows+cols
/// space), sizes 0 .. rows*cols.
std::vector<Integer> partitions_in_box(unsigned rows, unsigned cols);

/// Jacobi residual sum_m (c_ij^m c_mk^l + c_jk^m c_mi^l + c_ki^m c_mj^l)
/// evaluated directly on a raw table brackets[(i,j)] (i < j) -> coordinates,
/// without going through LieAlgebraPresentation.
Rational jacobi_residual(
    std::size_t dim,
    const std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>&
        brackets,
    std::size_t i, std::size_t j, std::size_t k, std::size_t l);

/// Raw i<j bracket table of a presentation, for perturbation fixtures.
std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>
bracket_table(const LieAlgebraPresentation& algebra);

}  // namespace skewloci::oracles
