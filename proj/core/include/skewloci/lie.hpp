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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skewloci/skew.hpp"

namespace skewloci {

/// Element of the dual space, as coordinates in the dual basis.
using Covector = std::vector<Rational>;

/// Lie algebra given by structure constants c_{ij}^k on a named basis,
/// stored for i < j only (antisymmetry is implicit; symmetric redundancy in
/// input files is rejected, not silently accepted).  Construction does not
/// check the Jacobi identity: call validate().  The CLI validates every
/// presentation it loads before using it, so files that reach a computation
/// are genuine Lie algebras; tests construct invalid tables on purpose.
class LieAlgebraPresentation {
 public:
  /// brackets[(i,j)] with i < j is the coordinate vector of [e_i, e_j].
  LieAlgebraPresentation(
      std::vector<std::string> basis_names,
      std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>
          brackets);

  /// Derives structure constants from a faithful matrix representation:
  /// [B_i, B_j] = B_i B_j - B_j B_i expanded over the (independent) basis.
  /// Throws PreconditionError if the matrices are dependent or the bracket
  /// leaves their span.
  static LieAlgebraPresentation from_basis_matrices(
      std::vector<std::string> basis_names,
      const std::vector<RationalMatrix>& basis);

  static LieAlgebraPresentation abelian(std::size_t n);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// c_{ij}^k for arbitrary i, j (sign-extended; zero for i == j).
  Rational structure_constant(std::size_t i, std::size_t j,
                              std::size_t k) const;

  /// [e_i, e_j] as a coordinate vector, arbitrary i, j.
  std::vector<Rational> basis_bracket(std::size_t i, std::size_t j) const;

  /// Bracket of arbitrary coordinate vectors.
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;

 private:
  std::vector<std::string> names_;
  // c_[pair_index(i,j)] = coordinates of [e_i, e_j], i < j.
  std::vector<std::vector<Rational>> c_;
  std::size_t pair_index(std::size_t i, std::size_t j) const;
};

struct JacobiFailure {
  std::size_t i = 0, j = 0, k = 0, l = 0;
  Rational residual;
};

/// Checks every Jacobi instance exactly; nullopt means the presentation is a
/// Lie algebra, otherwise the first violated (i<j<k, l) instance is returned.
std::optional<JacobiFailure> validate(const LieAlgebraPresentation& algebra);

/// The skew form of the coadjoint geometry evaluated against lambda:
/// (omega_lambda)_{ij} = lambda([e_i, e_j]) = sum_k c_{ij}^k lambda_k.
SkewMatrix omega_matrix(const LieAlgebraPresentation& algebra,
                        const Covector& lambda);

/// Dimension of the coadjoint orbit through lambda: the rank of
/// omega_lambda (its radical is the stabilizer subalgebra, so orbit
/// dimension = dim g - dim stabilizer = rank).  Always even.
std::size_t orbit_dimension(const LieAlgebraPresentation& algebra,
                            const Covector& lambda);

struct MinOrbitResult {
  std::size_t r = 0;
  Covector witness;
  std::string confidence;
};

/// Minimum orbit dimension over nonzero covectors, sampled over the dual
/// basis, all pairwise sums and differences, and `samples` seeded random
/// nonzero integer covectors (entries in [-5,5]).  "Nonzero orbit" means the
/// orbit of a nonzero covector, which may be a fixed point of dimension 0.
/// The result is an upper bound on the true minimum; for the catalog
/// algebras the structured set attains it exactly (recorded per algebra).
/// Requires samples >= dim.
MinOrbitResult min_nonzero_orbit_dim(const LieAlgebraPresentation& algebra,
                                     std::uint64_t seed, std::size_t samples);

struct OrbitBoundReport {
  std::size_t n = 0;      // dim g
  std::size_t r = 0;      // minimal nonzero orbit dimension
  std::size_t bound = 0;  // 2 * floor((2N+1)/6)
  long slack = 0;
  bool holds = false;  // violation = falsification event (a sampling bug)
  bool tight = false;
};

OrbitBoundReport check_min_orbit_bound(const LieAlgebraPresentation& algebra,
                                       std::size_t r);

struct HistogramEntry {
  std::size_t count = 0;
  Covector example;
};

/// Orbit-dimension histogram over the zero covector, the structured set and
/// `samples` random nonzero covectors; deterministic for the seed, all keys
/// even.
std::map<std::size_t, HistogramEntry> rank_stratification_histogram(
    const LieAlgebraPresentation& algebra, std::uint64_t seed,
    std::size_t samples);

/// Built-in algebra with recorded expected values.  first_stratum_dim is the
/// known dimension of {lambda : orbit dim <= r} at r = expected_min_orbit
/// (a reference value with its derivation in stratum_note); consistency with
/// r <= dim <= 2(N-r)+1 is part of the test surface.
struct CatalogEntry {
  std::string name;
  LieAlgebraPresentation algebra;
  std::size_t expected_min_orbit = 0;
  bool bound_tight = false;
  std::set<std::size_t> expected_histogram_keys;  // including 0
  std::size_t first_stratum_dim = 0;
  std::string stratum_note;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace skewloci
