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

#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace skewloci::oracles {

namespace {

Rational cofactor_det_rec(const RationalMatrix& m, std::size_t row,
                          std::uint64_t colmask,
                          std::unordered_map<std::uint64_t, Rational>& memo) {
  if (colmask == 0) return Rational(1);
  if (auto it = memo.find(colmask); it != memo.end()) return it->second;
  Rational sum = 0;
  int position = 0;
  for (std::uint64_t bits = colmask; bits != 0; bits &= bits - 1) {
    const int col = __builtin_ctzll(bits);
    const Rational& entry = m(row, static_cast<std::size_t>(col));
    if (entry != 0) {
      const Rational sub =
          cofactor_det_rec(m, row + 1, colmask & ~(1ULL << col), memo);
      if (position % 2 == 0) {
        sum += entry * sub;
      } else {
        sum -= entry * sub;
      }
    }
    ++position;
  }
  memo.emplace(colmask, sum);
  return sum;
}

}  // namespace

Rational cofactor_determinant(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  std::unordered_map<std::uint64_t, Rational> memo;
  return cofactor_det_rec(m, 0, (1ULL << n) - 1, memo);
}

std::vector<Integer> symmetric_group_by_length(unsigned k) {
  std::vector<unsigned> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Integer> dist(k == 0 ? 1 : k * (k - 1) / 2 + 1, Integer(0));
  do {
    unsigned inversions = 0;
    for (unsigned a = 0; a < k; ++a) {
      for (unsigned b = a + 1; b < k; ++b) {
        if (perm[a] > perm[b]) ++inversions;
      }
    }
    dist[inversions] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  while (!dist.empty() && dist.back() == 0) dist.pop_back();
  return dist;
}

std::vector<Integer> hyperoctahedral_by_length(unsigned n) {
  using Element = std::vector<int>;  // signed images of 1..n
  Element identity(n);
  for (unsigned i = 0; i < n; ++i) identity[i] = static_cast<int>(i) + 1;

  std::map<Element, unsigned> distance{{identity, 0}};
  std::deque<Element> queue{identity};
  unsigned max_len = 0;
  while (!queue.empty()) {
    const Element w = queue.front();
    queue.pop_front();
    const unsigned d = distance[w];
    max_len = std::max(max_len, d);
    for (unsigned g = 0; g < n; ++g) {
      Element next = w;
      if (g + 1 < n) {
        std::swap(next[g], next[g + 1]);
      } else {
        next[n - 1] = -next[n - 1];
      }
      if (distance.emplace(next, d + 1).second) queue.push_back(next);
    }
  }
  std::vector<Integer> dist(max_len + 1, Integer(0));
  for (const auto& [w, d] : distance) dist[d] += 1;
  return dist;
}

namespace {

// Partitions of `size` into at most `parts` parts, each at most `maxpart`.
Integer count_partitions(unsigned maxpart, unsigned parts, unsigned size,
                         std::map<std::tuple<unsigned, unsigned, unsigned>,
                                  Integer>& memo) {
  if (size == 0) return 1;
  if (parts == 0 || maxpart == 0) return 0;
  const auto key = std::make_tuple(maxpart, parts, size);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer sum = 0;
  for (unsigned first = 1; first <= std::min(maxpart, size); ++first) {
    sum += count_partitions(first, parts - 1, size - first, memo);
  }
  memo.emplace(key, sum);
  return sum;
}

}  // namespace

std::vector<Integer> partitions_in_box(unsigned rows, unsigned cols) {
  std::map<std::tuple<unsigned, unsigned, unsigned>, Integer> memo;
  std::vector<Integer> out(rows * cols + 1);
  for (unsigned s = 0; s <= rows * cols; ++s) {
    out[s] = count_partitions(cols, rows, s, memo);
  }
  return out;
}

namespace {

Rational raw_constant(
    std::size_t dim,
    const std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>&
        brackets,
    std::size_t i, std::size_t j, std::size_t k) {
  (void)dim;
  if (i == j) return Rational(0);
  const bool flip = i > j;
  const auto it = brackets.find(flip ? std::make_pair(j, i)
                                     : std::make_pair(i, j));
  if (it == brackets.end()) return Rational(0);
  return flip ? Rational(-it->second[k]) : it->second[k];
}

}  // namespace

Rational jacobi_residual(
    std::size_t dim,
    const std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>&
        brackets,
    std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  Rational residual = 0;
  for (std::size_t m = 0; m < dim; ++m) {
    residual += raw_constant(dim, brackets, i, j, m) *
                raw_constant(dim, brackets, m, k, l);
    residual += raw_constant(dim, brackets, j, k, m) *
                raw_constant(dim, brackets, m, i, l);
    residual += raw_constant(dim, brackets, k, i, m) *
                raw_constant(dim, brackets, m, j, l);
  }
  return residual;
}

std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>
bracket_table(const LieAlgebraPresentation& algebra) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> out;
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.emplace(std::make_pair(i, j), algebra.basis_bracket(i, j));
    }
  }
  return out;
}

}  // namespace skewloci::oracles
