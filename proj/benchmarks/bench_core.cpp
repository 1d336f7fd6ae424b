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

#include <benchmark/benchmark.h>

#include "skewloci/lie.hpp"
#include "skewloci/rng.hpp"
#include "skewloci/strata.hpp"
#include "skewloci/weyl.hpp"

namespace {

using namespace skewloci;

SkewMatrix random_skew(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  return SkewMatrix::from_strict_upper(
      n, rng.uniform_int_vector(n * (n - 1) / 2, -5, 5));
}

void BM_Pfaffian(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const SkewMatrix s = random_skew(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfaffian(s));
  }
}
BENCHMARK(BM_Pfaffian)->DenseRange(4, 12, 2);

void BM_Rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  SeededRng rng(2);
  const RationalMatrix m(n, n, rng.uniform_int_vector(n * n, -9, 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(4, 32);

void BM_PoincareQuotient(benchmark::State& state) {
  const unsigned r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(poincare_parabolic_quotient(
        {exponents_sl(r)}, {exponents_sl(2), exponents_sl(r - 2)}));
  }
}
BENCHMARK(BM_PoincareQuotient)->Arg(8)->Arg(14)->Arg(20);

void BM_ExactSmallCheck(benchmark::State& state) {
  // certify a constant-rank-4 triple in N=5, the maximal dimension there
  const SearchOutcome found = search_constant_rank(5, 4, 3, 7, 1000);
  const SkewLinearSpace space = *found.space;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        is_constant_rank(space, 4, CheckMode::exact_small(3, 64)));
  }
}
BENCHMARK(BM_ExactSmallCheck);

void BM_OrbitHistogram(benchmark::State& state) {
  const LieAlgebraPresentation& sl3 = catalog_find("sl3")->algebra;
  const std::size_t samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_stratification_histogram(sl3, 5, samples));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_OrbitHistogram)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
