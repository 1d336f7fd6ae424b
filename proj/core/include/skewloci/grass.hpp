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
#include <optional>

#include "skewloci/skew.hpp"
#include "skewloci/subspace.hpp"

namespace skewloci {

// Fiberwise subspace calculus: projection away from a kernel subspace, graph
// coordinates on the fibers of that projection, restriction of skew forms to
// 2-planes, and the affine chart-transition action.  Everything here works on
// a single vector space (one fiber) or a single chart transition; bundle
// statements over a base reduce to this data.

/// Image rho(p) of a subspace under a surjection rho: Q^N -> Q^r.  Requires
/// p to meet kernel(rho) trivially so the dimension is preserved; otherwise
/// throws DegenerateProjectionError.  Throws PreconditionError if rho is not
/// surjective.
Subspace project_from(const Subspace& p, const RationalMatrix& rho);

/// Value of the skew form on the canonical ordered basis (b1, b2) of a
/// 2-plane: b1^T J b2.  Zero iff the plane is isotropic; the value itself
/// depends on the basis, only its vanishing is intrinsic.  Throws
/// DimensionError unless dim p == 2 and ambients match.
Rational restrict_skew_form(const SkewMatrix& j, const Subspace& p);

/// Quotient data of a skew form by its radical K = kernel(J): the quotient
/// map rho onto the canonical complement (the non-pivot coordinates of K's
/// RREF basis), the induced nondegenerate form of size rank(J), and the
/// section of rho embedding the complement back into Q^N.
struct QuotientForm {
  RationalMatrix rho;      // rank(J) x N
  SkewMatrix form;         // induced nondegenerate skew form on the quotient
  Subspace radical;        // K = kernel(J)
  RationalMatrix section;  // N x rank(J), rho * section = identity
};

QuotientForm induced_form_on_quotient(const SkewMatrix& j);

/// Rank of the affine-linear fiber of the projection-from-K map on s-planes:
/// s * (N - r).  Throws PreconditionError unless s <= r <= N.
std::size_t fiber_dimension_of_projection(std::size_t n, std::size_t r,
                                          std::size_t s);

/// A right inverse f of a surjection rho (rho * f = identity); the space of
/// such maps is an affine space over Hom(W, K).
struct SectionMap {
  RationalMatrix f;  // N x r
};

/// Canonical section of a surjection: free coordinates set to zero.
/// Throws PreconditionError if rho is not surjective.
SectionMap canonical_section(const RationalMatrix& rho);

/// True iff rho * f = identity.
bool is_section(const RationalMatrix& rho, const RationalMatrix& f);

/// Graph coordinates of p over q in the fiber of the projection from K:
/// if rho(p) = q, the unique s x dim(K) matrix h (rows = coordinates in K's
/// canonical basis) with p = span{ lift(w_i) + h_i K } over the canonical
/// basis w_i of q, where lift is the canonical section.  Returns nullopt when
/// p is not in the fiber over q.  This is a bijection between the fiber and
/// Hom(q, K); fiber_point_from_witness inverts it.  Throws PreconditionError
/// if K != kernel(rho) or shapes are inconsistent.
std::optional<RationalMatrix> fiber_membership_witness(const Subspace& q,
                                                       const Subspace& p,
                                                       const RationalMatrix& rho,
                                                       const Subspace& k);

/// Inverse of fiber_membership_witness: the subspace with graph coordinates h
/// over q.
Subspace fiber_point_from_witness(const Subspace& q, const RationalMatrix& h,
                                  const RationalMatrix& rho, const Subspace& k);

/// One chart transition of a compatible trivialization: the block matrix
/// [[alpha, m], [0, gamma]] with alpha, gamma invertible.
struct ChartBlock {
  RationalMatrix alpha;  // (N-r) x (N-r)
  RationalMatrix gamma;  // r x r
  RationalMatrix m;      // (N-r) x r
};

/// [[alpha, m], [0, gamma]] assembled as one matrix.
RationalMatrix assemble_block(const ChartBlock& block);

/// Composition of transitions: assemble_block(compose(b2, b1)) =
/// assemble_block(b2) * assemble_block(b1).
ChartBlock compose(const ChartBlock& second, const ChartBlock& first);

/// Action of a chart transition on the graph coordinate f of a section:
/// alpha * f * gamma^{-1} + m * gamma^{-1}.  The implementation additionally
/// checks this against the geometric route (the top block of
/// [[alpha,m],[0,gamma]] * [f; I] * gamma^{-1}); a mismatch throws Error.
/// Throws SingularMatrixError for singular blocks, DimensionError on shape
/// mismatch.  With m = 0 the action is the linear one f -> alpha f gamma^{-1}.
RationalMatrix chart_transition_action(const ChartBlock& block,
                                       const RationalMatrix& f);

}  // namespace skewloci
