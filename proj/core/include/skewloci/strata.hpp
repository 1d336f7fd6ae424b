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
#include <string>
#include <vector>

#include "skewloci/skew.hpp"

namespace skewloci {

/// Linear space of N x N skew matrices, spanned by a linearly independent
/// basis (independence is verified at construction).
class SkewLinearSpace {
 public:
  /// m = 0 is allowed (the zero space); throws PreconditionError on size
  /// mismatch or a dependent basis.
  explicit SkewLinearSpace(std::size_t n, std::vector<SkewMatrix> basis = {});

  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SkewMatrix>& basis() const { return basis_; }

  /// sum_i coeffs[i] * basis[i]; throws DimensionError on length mismatch.
  SkewMatrix element_at(const std::vector<Rational>& coeffs) const;

 private:
  std::size_t n_;
  std::vector<SkewMatrix> basis_;
};

struct RankProfileEntry {
  std::size_t count = 0;
  std::vector<Rational> representative;  // first coefficient vector seen
};

struct RankProfile {
  std::map<std::size_t, RankProfileEntry> by_rank;
  std::size_t max_rank = 0;  // lower bound on the generic rank
  std::size_t min_nonzero_rank = 0;
  std::size_t samples = 0;
};

/// Ranks over a structured-plus-random sample of the space: all coordinate
/// vectors, all pairwise sums, then `samples` random integer vectors with
/// entries in [-5,5] (zero vectors redrawn).  Deterministic for the seed.
RankProfile rank_profile(const SkewLinearSpace& space, std::uint64_t seed,
                         std::size_t samples);

enum class RankVerdictKind {
  kConstantRank,  // exact-small only: rank <= r certified, no drop sampled
  kFoundDrop,     // witness with 0 < rank < r
  kFoundExcess,   // witness with rank > r
  kInconclusive,  // probabilistic mode found no witness
};

std::string to_string(RankVerdictKind kind);

struct RankVerdict {
  RankVerdictKind kind = RankVerdictKind::kInconclusive;
  std::vector<Rational> witness;  // coefficients, for drop/excess
  std::size_t witness_rank = 0;
  bool upper_bound_certified = false;  // all (r+2)-Pfaffian minors vanish
  bool full_rank_witnessed = false;    // some sample has rank exactly r
  std::size_t samples_checked = 0;
  std::string confidence;
};

struct CheckMode {
  enum class Kind { kProbabilistic, kExactSmall };
  Kind kind = Kind::kProbabilistic;
  std::uint64_t seed = 0;
  std::size_t trials = 128;  // random samples beyond the structured set

  static CheckMode probabilistic(std::uint64_t seed, std::size_t trials) {
    return {Kind::kProbabilistic, seed, trials};
  }
  static CheckMode exact_small(std::uint64_t seed, std::size_t trials = 128) {
    return {Kind::kExactSmall, seed, trials};
  }
};

/// Checks whether every nonzero element of the space has rank exactly r
/// (r even, 0 < r <= N; odd r throws OddDimensionError — skew ranks are
/// even).
///
/// Probabilistic mode samples structured plus random coefficient vectors and
/// reports witnesses; with none found it returns Inconclusive (it never
/// certifies).  Exact-small mode (m <= 3, N <= 8, else PreconditionError)
/// first certifies rank <= r everywhere by expanding every (r+2)-subset
/// Pfaffian minor of the generic element as a polynomial in the m
/// coefficients and checking identical vanishing (a nonvanishing minor yields
/// an exact FoundExcess witness from a small grid), then samples for drops;
/// ConstantRank therefore means: upper bound certified, lower bound sampled
/// with the confidence note spelling out what was and was not certified.
RankVerdict is_constant_rank(const SkewLinearSpace& space, std::size_t r,
                             const CheckMode& mode);

struct SubspaceBoundReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t dimension_checked = 0;  // m, or m-1 for the projectivized form
  std::size_t bound = 0;
  long slack = 0;
  bool holds = false;  // a violation is a falsification event, i.e. a bug
};

/// Checks dim U = m against the constant-rank space bound 2(N-r)+1.
/// Precondition (not rechecked): the space was verified of constant rank r.
SubspaceBoundReport verify_constant_rank_bound(const SkewLinearSpace& space,
                                               std::size_t r);

/// Checks the projectivization P(U), an (m-1)-dimensional family of rank-r
/// points avoiding the rank-(r-2) locus, against the bound 2(N-r).
SubspaceBoundReport projectivized_family_check(const SkewLinearSpace& space,
                                               std::size_t r);

struct SearchOutcome {
  std::optional<SkewLinearSpace> space;  // empty = NotFound (not a proof)
  RankVerdict verdict;                   // verdict of the found space
  std::size_t restarts_used = 0;
  std::size_t bound = 0;  // 2(N-r)+1, cited in reports
};

/// Seeded random-restart search for a constant-rank-r space of dimension
/// target_m: each restart draws integer skew matrices with entries in [-3,3],
/// screens probabilistically, and accepts only candidates certified by
/// exact-small mode.  Candidates outside the exact-small range can never be
/// verified, so such searches report NotFound after the budget — a
/// consistency check, not a nonexistence proof.  Restarts use per-index
/// derived seeds; results depend only on (master seed, budget).
SearchOutcome search_constant_rank(std::size_t n, std::size_t r,
                                   std::size_t target_m, std::uint64_t seed,
                                   std::size_t budget);

struct BoundQuery {
  enum class Kind { kSkew, kSymmetric };
  Kind kind = Kind::kSkew;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t e = 0;  // defect of the twisting bundle; 0 for ample
};

/// Maximum dimension d of a base carrying a constant-rank-r form with defect
/// e: skew gives 2(N-r)+e, symmetric gives N-r+e.  Beyond the bound the
/// rank-(r-2) locus is forced to be nonempty.  Validates r <= N and (skew)
/// evenness of r.
std::size_t degeneracy_bound(const BoundQuery& query);

/// Projective dimension of the locus of N x N skew matrices of rank <= r:
/// N(N-1)/2 - (N-r)(N-r-1)/2 - 1.  r = 0 gives -1 (empty projective locus).
/// Consecutive strata differ by exactly 2(N-r)+1.
long ss_locus_dimension(std::size_t n, std::size_t r);

}  // namespace skewloci
