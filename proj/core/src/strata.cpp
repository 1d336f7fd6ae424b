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

#include "skewloci/strata.hpp"

#include <sstream>
#include <utility>

#include "multipoly.hpp"
#include "skewloci/rng.hpp"

namespace skewloci {

SkewLinearSpace::SkewLinearSpace(std::size_t n, std::vector<SkewMatrix> basis)
    : n_(n), basis_(std::move(basis)) {
  for (const SkewMatrix& b : basis_) {
    if (b.size() != n_) {
      throw PreconditionError("basis matrix size mismatch");
    }
  }
  if (basis_.empty()) return;
  // Independence in the space of skew matrices, via the strict upper
  // triangles as vectors.
  const std::size_t width = n_ * (n_ - 1) / 2;
  RationalMatrix flat(basis_.size(), width);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::vector<Rational> upper = basis_[i].strict_upper();
    for (std::size_t j = 0; j < width; ++j) flat(i, j) = upper[j];
  }
  if (rank(flat) != basis_.size()) {
    throw PreconditionError("basis matrices are linearly dependent");
  }
}

SkewMatrix SkewLinearSpace::element_at(
    const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != basis_.size()) {
    throw DimensionError("coefficient count does not match space dimension");
  }
  RationalMatrix sum(n_, n_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coeffs[i] == 0) continue;
    sum = sum + basis_[i].matrix() * coeffs[i];
  }
  return SkewMatrix(std::move(sum));
}

namespace {

// Coordinate vectors and pairwise sums, always probed before random points.
std::vector<std::vector<Rational>> structured_coefficients(std::size_t m) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> e(m);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<Rational> e(m);
      e[i] = 1;
      e[j] = 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

RankProfile rank_profile(const SkewLinearSpace& space, std::uint64_t seed,
                         std::size_t samples) {
  RankProfile profile;
  const std::size_t m = space.dim();
  if (m == 0) return profile;

  std::vector<std::vector<Rational>> points = structured_coefficients(m);
  SeededRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    points.push_back(rng.uniform_nonzero_vector(m, -5, 5));
  }

  profile.min_nonzero_rank = space.matrix_size() + 1;
  for (const std::vector<Rational>& coeffs : points) {
    const std::size_t r = rank(space.element_at(coeffs).matrix());
    auto [it, inserted] = profile.by_rank.try_emplace(r);
    if (inserted) it->second.representative = coeffs;
    ++it->second.count;
    ++profile.samples;
    if (r > profile.max_rank) profile.max_rank = r;
    if (r > 0 && r < profile.min_nonzero_rank) profile.min_nonzero_rank = r;
  }
  return profile;
}

std::string to_string(RankVerdictKind kind) {
  switch (kind) {
    case RankVerdictKind::kConstantRank:
      return "ConstantRank";
    case RankVerdictKind::kFoundDrop:
      return "FoundDrop";
    case RankVerdictKind::kFoundExcess:
      return "FoundExcess";
    case RankVerdictKind::kInconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

struct SampleScan {
  std::optional<RankVerdict> witness_verdict;
  bool full_rank_seen = false;
  std::size_t samples = 0;
};

SampleScan scan_samples(const SkewLinearSpace& space, std::size_t r,
                        std::uint64_t seed, std::size_t trials) {
  SampleScan scan;
  std::vector<std::vector<Rational>> points =
      structured_coefficients(space.dim());
  SeededRng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    points.push_back(rng.uniform_nonzero_vector(space.dim(), -5, 5));
  }
  for (const std::vector<Rational>& coeffs : points) {
    const std::size_t got = rank(space.element_at(coeffs).matrix());
    ++scan.samples;
    if (got == r) {
      scan.full_rank_seen = true;
      continue;
    }
    if (got == 0) continue;  // dependent only if basis were dependent
    RankVerdict verdict;
    verdict.kind = got > r ? RankVerdictKind::kFoundExcess
                           : RankVerdictKind::kFoundDrop;
    verdict.witness = coeffs;
    verdict.witness_rank = got;
    verdict.samples_checked = scan.samples;
    scan.witness_verdict = std::move(verdict);
    return scan;
  }
  return scan;
}

// All (r+2)-subset principal Pfaffians of the generic element as polynomials
// in the coefficients; returns a witness point where some minor is nonzero,
// or nullopt when all vanish identically (rank <= r everywhere).
std::optional<std::vector<Rational>> excess_witness_from_minors(
    const SkewLinearSpace& space, std::size_t r) {
  const std::size_t n = space.matrix_size();
  const std::size_t m = space.dim();
  if (n < r + 2) return std::nullopt;  // rank <= r is automatic

  using detail::MultiPoly;
  std::vector<std::vector<MultiPoly>> entries(
      n, std::vector<MultiPoly>(n, MultiPoly(m)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiPoly e(m);
      for (std::size_t t = 0; t < m; ++t) {
        if (space.basis()[t].entry(i, j) == 0) continue;
        e += MultiPoly::constant(m, space.basis()[t].entry(i, j)) *
             MultiPoly::variable(m, t);
      }
      entries[i][j] = std::move(e);
    }
  }

  std::map<std::uint64_t, MultiPoly> memo;
  // Gosper iteration over all index subsets of size r+2.
  const std::uint64_t limit = 1ULL << n;
  std::uint64_t mask = (1ULL << (r + 2)) - 1;
  while (mask < limit) {
    const MultiPoly minor = detail::symbolic_pfaffian(entries, mask, m, memo);
    if (!minor.is_zero()) {
      // A nonzero polynomial cannot vanish on a grid with more values per
      // axis than its per-variable degree.
      const unsigned d = minor.max_variable_degree();
      std::vector<Rational> point(m, Rational(0));
      std::vector<unsigned> idx(m, 0);
      for (;;) {
        for (std::size_t v = 0; v < m; ++v) point[v] = Rational(idx[v]);
        if (minor.evaluate(point) != 0) return point;
        std::size_t v = m;
        while (v-- > 0) {
          if (++idx[v] <= d) break;
          idx[v] = 0;
          if (v == 0) throw Error("nonzero minor vanished on its grid");
        }
      }
    }
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t rr = mask + c;
    mask = (((rr ^ mask) >> 2) / c) | rr;
  }
  return std::nullopt;
}

}  // namespace

RankVerdict is_constant_rank(const SkewLinearSpace& space, std::size_t r,
                             const CheckMode& mode) {
  if (r % 2 != 0) {
    throw OddDimensionError("skew-symmetric ranks are even");
  }
  if (r == 0 || r > space.matrix_size()) {
    throw PreconditionError("rank must satisfy 0 < r <= N");
  }
  const bool exact = mode.kind == CheckMode::Kind::kExactSmall;
  if (exact && (space.dim() > 3 || space.matrix_size() > 8)) {
    throw PreconditionError("exact-small mode is limited to m <= 3, N <= 8");
  }

  RankVerdict verdict;
  if (space.dim() == 0) {
    verdict.kind = RankVerdictKind::kConstantRank;
    verdict.upper_bound_certified = true;
    verdict.confidence = "zero-dimensional space: vacuously constant rank";
    return verdict;
  }

  if (exact) {
    if (auto witness = excess_witness_from_minors(space, r)) {
      verdict.kind = RankVerdictKind::kFoundExcess;
      verdict.witness = *witness;
      verdict.witness_rank = rank(space.element_at(*witness).matrix());
      verdict.confidence =
          "a (r+2)-subset Pfaffian minor is not identically zero; witness "
          "found by grid enumeration";
      return verdict;
    }
    verdict.upper_bound_certified = true;
  }

  SampleScan scan = scan_samples(space, r, mode.seed, mode.trials);
  if (scan.witness_verdict) {
    RankVerdict out = *scan.witness_verdict;
    out.upper_bound_certified = verdict.upper_bound_certified;
    return out;
  }

  verdict.samples_checked = scan.samples;
  verdict.full_rank_witnessed = scan.full_rank_seen;
  std::ostringstream note;
  if (exact) {
    verdict.kind = RankVerdictKind::kConstantRank;
    if (space.matrix_size() < r + 2) {
      note << "rank <= " << r << " is automatic (N < r+2); ";
    } else {
      note << "rank <= " << r << " certified: every " << (r + 2)
           << "-subset Pfaffian minor vanishes identically; ";
    }
    note << "no rank drop among " << scan.samples
         << " structured+random samples";
    if (scan.full_rank_seen) {
      note << "; rank " << r << " attained, so the generic rank is exactly "
           << r;
    }
    note << ". Isolated non-rational drop points cannot be excluded by "
            "rational sampling.";
  } else {
    verdict.kind = RankVerdictKind::kInconclusive;
    note << "no witness among " << scan.samples
         << " samples; if some (r+2)-subset Pfaffian minor (degree "
         << (r + 2) / 2
         << ") were nonzero, the chance that all " << mode.trials
         << " random samples missed it is at most (" << (r + 2) / 2
         << "/11)^" << mode.trials
         << " (Schwartz-Zippel); no certificate for rank >= " << r << ".";
  }
  verdict.confidence = note.str();
  return verdict;
}

SubspaceBoundReport verify_constant_rank_bound(const SkewLinearSpace& space,
                                               std::size_t r) {
  if (r > space.matrix_size()) throw PreconditionError("r exceeds N");
  SubspaceBoundReport report;
  report.m = space.dim();
  report.n = space.matrix_size();
  report.r = r;
  report.dimension_checked = report.m;
  report.bound = 2 * (report.n - r) + 1;
  report.slack = static_cast<long>(report.bound) - static_cast<long>(report.m);
  report.holds = report.slack >= 0;
  return report;
}

SubspaceBoundReport projectivized_family_check(const SkewLinearSpace& space,
                                               std::size_t r) {
  if (space.dim() == 0) {
    throw PreconditionError("projectivization of the zero space is empty");
  }
  if (r > space.matrix_size()) throw PreconditionError("r exceeds N");
  SubspaceBoundReport report;
  report.m = space.dim();
  report.n = space.matrix_size();
  report.r = r;
  report.dimension_checked = report.m - 1;
  report.bound = 2 * (report.n - r);
  report.slack = static_cast<long>(report.bound) -
                 static_cast<long>(report.dimension_checked);
  report.holds = report.slack >= 0;
  return report;
}

SearchOutcome search_constant_rank(std::size_t n, std::size_t r,
                                   std::size_t target_m, std::uint64_t seed,
                                   std::size_t budget) {
  if (r % 2 != 0) throw OddDimensionError("skew-symmetric ranks are even");
  if (r == 0 || r > n) throw PreconditionError("need 0 < r <= N");
  if (target_m == 0) throw PreconditionError("target dimension must be >= 1");

  SearchOutcome outcome;
  outcome.bound = 2 * (n - r) + 1;
  const std::size_t width = n * (n - 1) / 2;
  const bool verifiable = target_m <= 3 && n <= 8;

  for (std::size_t restart = 0; restart < budget; ++restart) {
    outcome.restarts_used = restart + 1;
    SeededRng rng(SeededRng::derive(seed, 2 * restart));
    std::vector<SkewMatrix> basis;
    basis.reserve(target_m);
    for (std::size_t i = 0; i < target_m; ++i) {
      basis.push_back(
          SkewMatrix::from_strict_upper(n, rng.uniform_int_vector(width, -3, 3)));
    }
    std::optional<SkewLinearSpace> candidate;
    try {
      candidate.emplace(n, std::move(basis));
    } catch (const PreconditionError&) {
      continue;  // dependent draw; spend the restart
    }

    const std::uint64_t check_seed = SeededRng::derive(seed, 2 * restart + 1);
    const RankVerdict probe = is_constant_rank(
        *candidate, r, CheckMode::probabilistic(check_seed, 64));
    if (probe.kind == RankVerdictKind::kFoundDrop ||
        probe.kind == RankVerdictKind::kFoundExcess) {
      continue;
    }
    if (!verifiable) continue;  // nothing can certify this candidate

    const RankVerdict certified =
        is_constant_rank(*candidate, r, CheckMode::exact_small(check_seed, 128));
    if (certified.kind == RankVerdictKind::kConstantRank) {
      outcome.space = std::move(candidate);
      outcome.verdict = certified;
      return outcome;
    }
  }
  outcome.restarts_used = budget;
  return outcome;
}

std::size_t degeneracy_bound(const BoundQuery& query) {
  if (query.r > query.n) throw PreconditionError("need r <= N");
  if (query.kind == BoundQuery::Kind::kSkew && query.r % 2 != 0) {
    throw OddDimensionError("skew-symmetric ranks are even");
  }
  const std::size_t gap = query.n - query.r;
  return query.kind == BoundQuery::Kind::kSkew ? 2 * gap + query.e
                                               : gap + query.e;
}

long ss_locus_dimension(std::size_t n, std::size_t r) {
  if (r > n) throw PreconditionError("need r <= N");
  if (r % 2 != 0) throw OddDimensionError("skew-symmetric ranks are even");
  const long total = static_cast<long>(n * (n - 1) / 2);
  const long gap = static_cast<long>((n - r) * (n - r - 1) / 2);
  return total - gap - 1;
}

}  // namespace skewloci
