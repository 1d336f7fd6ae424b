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

#include "skewloci/skew.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>

#include "skewloci/rng.hpp"

namespace skewloci {

SkewMatrix::SkewMatrix(RationalMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) {
    throw PreconditionError("skew matrix must be square");
  }
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (matrix_(i, j) != -matrix_(j, i)) {
        throw PreconditionError("matrix is not skew-symmetric");
      }
    }
  }
}

SkewMatrix SkewMatrix::zero(std::size_t n) {
  return SkewMatrix(RationalMatrix(n, n));
}

SkewMatrix SkewMatrix::standard_symplectic(std::size_t n) {
  if (n % 2 != 0) {
    throw OddDimensionError("symplectic form needs even dimension");
  }
  RationalMatrix m(n, n);
  for (std::size_t b = 0; b + 1 < n; b += 2) {
    m(b, b + 1) = 1;
    m(b + 1, b) = -1;
  }
  return SkewMatrix(std::move(m));
}

SkewMatrix SkewMatrix::from_strict_upper(std::size_t n,
                                         const std::vector<Rational>& upper) {
  if (upper.size() != n * (n - 1) / 2) {
    throw DimensionError("strict upper triangle has wrong length");
  }
  RationalMatrix m(n, n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = upper[idx];
      m(j, i) = -upper[idx];
      ++idx;
    }
  }
  return SkewMatrix(std::move(m));
}

std::vector<Rational> SkewMatrix::strict_upper() const {
  const std::size_t n = size();
  std::vector<Rational> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(matrix_(i, j));
  }
  return out;
}

namespace {

// pf over the index subset `mask`: expansion along the lowest present index,
// pf = sum_t (-1)^{t-1} a(i0, i_t) pf(mask - {i0, i_t}).
Rational pfaffian_masked(const RationalMatrix& a, std::uint64_t mask,
                         std::unordered_map<std::uint64_t, Rational>& memo) {
  if (mask == 0) return Rational(1);
  if (auto it = memo.find(mask); it != memo.end()) return it->second;

  const int first = __builtin_ctzll(mask);
  const std::uint64_t rest = mask & ~(1ULL << first);
  Rational sum = 0;
  int position = 0;
  for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
    const int j = __builtin_ctzll(bits);
    const Rational& entry = a(static_cast<std::size_t>(first),
                              static_cast<std::size_t>(j));
    if (entry != 0) {
      const Rational sub =
          pfaffian_masked(a, rest & ~(1ULL << j), memo);
      if (position % 2 == 0) {
        sum += entry * sub;
      } else {
        sum -= entry * sub;
      }
    }
    ++position;
  }
  memo.emplace(mask, sum);
  return sum;
}

}  // namespace

Rational pfaffian(const SkewMatrix& s) {
  const std::size_t n = s.size();
  if (n % 2 != 0) throw OddDimensionError("pfaffian needs even size");
  if (n == 0) return Rational(1);
  if (n > 63) throw PreconditionError("pfaffian subset table limited to n<=63");
  std::unordered_map<std::uint64_t, Rational> memo;
  const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  return pfaffian_masked(s.matrix(), full, memo);
}

std::optional<Rational> conformal_factor(const RationalMatrix& g,
                                         const SkewMatrix& j) {
  const std::size_t n = j.size();
  if (!g.is_square() || g.rows() != n) {
    throw DimensionError("conformal factor: size mismatch");
  }
  if (n % 2 != 0) throw OddDimensionError("conformal factor needs even size");
  if (rank(j.matrix()) != n) {
    throw PreconditionError("conformal factor: form must be nondegenerate");
  }
  const RationalMatrix lhs = g.transpose() * j.matrix() * g;
  // tau from the first nonzero entry of J, then full verification.
  Rational tau;
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i) {
    for (std::size_t k = 0; k < n && !found; ++k) {
      if (j.entry(i, k) != 0) {
        tau = lhs(i, k) / j.entry(i, k);
        found = true;
      }
    }
  }
  if (lhs == j.matrix() * tau) return tau;
  return std::nullopt;
}

RationalMatrix symplectic_transvection(const SkewMatrix& j,
                                       const std::vector<Rational>& direction,
                                       const Rational& coefficient) {
  const std::size_t n = j.size();
  if (direction.size() != n) {
    throw DimensionError("transvection direction has wrong length");
  }
  // v -> v + c (v^T J u) u  =  (I + c u (Ju)^T) v, since u^T J u = 0.
  const std::vector<Rational> ju = matvec(j.matrix(), direction);
  RationalMatrix t = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (direction[i] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      t(i, k) += coefficient * direction[i] * ju[k];
    }
  }
  return t;
}

RationalMatrix random_conformal_symplectic(std::size_t r, std::uint64_t seed,
                                           std::size_t steps,
                                           std::optional<Rational> scaling) {
  if (r % 2 != 0) throw OddDimensionError("even size required");
  if (r < 2) throw PreconditionError("size must be at least 2");
  const SkewMatrix j = SkewMatrix::standard_symplectic(r);
  SeededRng rng(seed);
  RationalMatrix g = RationalMatrix::identity(r);
  for (std::size_t step = 0; step < steps; ++step) {
    const std::vector<Rational> u = rng.uniform_nonzero_vector(r, -3, 3);
    const Rational c(rng.uniform_nonzero_int(-3, 3));
    g = symplectic_transvection(j, u, c) * g;
  }
  Rational s;
  if (scaling.has_value()) {
    if (*scaling == 0) throw PreconditionError("scaling must be nonzero");
    s = *scaling;
  } else {
    s = make_rational(rng.uniform_nonzero_int(-3, 3), rng.uniform_int(1, 3));
  }
  return g * s;
}

}  // namespace skewloci
