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
#include <vector>

#include "skewloci/qpolynomial.hpp"

namespace skewloci {

enum class GroupType { kA, kC };

/// Fundamental degree list of a Weyl group: the integers d_i with
/// P(G/B) = prod_i (q^{d_i} - 1) / (q - 1)^l.  (These are often called
/// degrees; some sources call them exponents — the numbers here are the
/// d_i of the product formula.)  Indexed by Cartan rank: A_l has degrees
/// 2..l+1, C_l has 2,4,...,2l; rank 0 is the trivial group with an empty
/// list, and C_1 = A_1 has [2].
struct ExponentList {
  GroupType type = GroupType::kA;
  unsigned cartan_rank = 0;
  std::vector<unsigned> degrees;

  bool operator==(const ExponentList& other) const = default;
};

ExponentList exponents(GroupType type, unsigned cartan_rank);

/// Degree lists indexed the matrix-group way: sl_r is A_{r-1}; sp_r (r even)
/// is C_{r/2}.  exponents_sl(2) = [2], exponents_sp(4) = [2,4],
/// exponents_sp(0) = [].
ExponentList exponents_sl(unsigned r);
ExponentList exponents_sp(unsigned r);

/// Poincare polynomial (in q = t^2) of the full flag variety of a reductive
/// group whose semisimple part has the given degree multiset:
/// prod_i (q^{d_i} - 1) exactly divided by (q-1)^l.  Empty list gives 1.
QPolynomial poincare_full_flag(const std::vector<unsigned>& degrees);
QPolynomial poincare_full_flag(const ExponentList& exponents);

/// Multiset union of degree lists over the simple factors of a reductive
/// group (the degree set of a product is the union with multiplicities).
std::vector<unsigned> combined_degrees(const std::vector<ExponentList>& factors);

/// P(G/P) = P(G/B) / P(L/B_L) for a parabolic with Levi factor L, both sides
/// given as lists of simple factors.  Throws NotDivisibleError for a Levi
/// that does not embed (invalid pairing).
QPolynomial poincare_parabolic_quotient(const std::vector<ExponentList>& group,
                                        const std::vector<ExponentList>& levi);

/// Closed-form Poincare polynomial of the Grassmannian of 2-planes in an
/// r-dimensional space, r = 2n even >= 2: coefficients ascend 1,1,2,2,...
/// peak at n in the middle degree r-2, palindromic, degree 2r-4.
/// r = 2 gives the point, 1.
QPolynomial poincare_grass2(std::size_t r);

/// Closed-form Poincare polynomial of the isotropic-2-plane Grassmannian in
/// a symplectic r-dimensional space, r even >= 4: same ascent capped at n-1,
/// palindromic of degree 2r-5.  r < 4 is an error (the space would be empty;
/// callers wanting emptiness semantics use the degeneracy-bound calculators).
QPolynomial poincare_isotropic_grass2(std::size_t r);

/// Poincare polynomial of a fiber bundle with homologically even fiber over
/// a base with known polynomial: the product (the homology of the total
/// space is the tensor product of base and fiber homology).  Everything here
/// is indexed by q = t^2 since the fibers have no odd homology; a base with
/// odd homology is handled by passing both arguments indexed by t instead
/// (re-index the fiber polynomial by doubling each exponent).
QPolynomial poincare_bundle(const QPolynomial& base, const QPolynomial& fiber);

/// Betti numbers of a base space: b[i] = dim H_i, indexed by homological
/// degree; d is the complex dimension.
struct BettiVector {
  std::size_t d = 0;
  std::vector<Integer> b;
};

/// Throws PreconditionError unless length >= 1 and entries are >= 0.
void validate_betti(const BettiVector& betti);

/// dim H_{2d+2r-4} of the 2-plane Grassmannian bundle of a rank-r symplectic
/// bundle over the base: the full descending coefficient run of the fiber
/// polynomial from degree 2r-4 down to the middle r-2, paired against
/// b_{2d}, b_{2d-2}, ...  (Generated from poincare_grass2 rather than a
/// hard-coded coefficient pattern.)
Integer top_betti_grass2_bundle(const BettiVector& betti, std::size_t r);

/// dim H_{2d+2r-6} of the isotropic bundle: the grass2 value minus b_{2d}.
Integer top_betti_isotropic_bundle(const BettiVector& betti, std::size_t r);

}  // namespace skewloci
