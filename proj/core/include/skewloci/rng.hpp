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
#include <random>
#include <vector>

#include "skewloci/rational.hpp"

namespace skewloci {

/// Deterministic seeded randomness.  Every random choice in the library is
/// derived from an explicit 64-bit seed through this wrapper; the underlying
/// generator (mt19937_64) and the rejection sampling below are fully specified,
/// so identical seeds give identical sequences on every platform.  The std
/// distribution classes are deliberately not used: their output is
/// implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive, by rejection sampling.
  long uniform_int(long lo, long hi);

  /// Uniform integer in [lo, hi] excluding 0.
  long uniform_nonzero_int(long lo, long hi);

  /// Vector of uniform integers in [lo, hi] as rationals.
  std::vector<Rational> uniform_int_vector(std::size_t size, long lo, long hi);

  /// As above but redrawn until some entry is nonzero.
  std::vector<Rational> uniform_nonzero_vector(std::size_t size, long lo,
                                               long hi);

  /// Stateless per-index seed derivation (splitmix64), used to give search
  /// restarts and parallel samplers independent deterministic streams.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

}  // namespace skewloci
