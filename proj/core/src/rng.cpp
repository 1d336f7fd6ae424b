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

#include "skewloci/rng.hpp"

#include "skewloci/errors.hpp"

namespace skewloci {

long SeededRng::uniform_int(long lo, long hi) {
  if (lo > hi) throw PreconditionError("uniform_int: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return lo + static_cast<long>(next());  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % range);
}

long SeededRng::uniform_nonzero_int(long lo, long hi) {
  if (lo == 0 && hi == 0) throw PreconditionError("only zero in range");
  long v;
  do {
    v = uniform_int(lo, hi);
  } while (v == 0);
  return v;
}

std::vector<Rational> SeededRng::uniform_int_vector(std::size_t size, long lo,
                                                    long hi) {
  std::vector<Rational> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    out.emplace_back(uniform_int(lo, hi));
  }
  return out;
}

std::vector<Rational> SeededRng::uniform_nonzero_vector(std::size_t size,
                                                        long lo, long hi) {
  if (size == 0) throw PreconditionError("empty vector cannot be nonzero");
  for (;;) {
    std::vector<Rational> v = uniform_int_vector(size, lo, hi);
    for (const Rational& q : v) {
      if (q != 0) return v;
    }
  }
}

std::uint64_t SeededRng::derive(std::uint64_t master, std::uint64_t index) {
  // splitmix64 on master + (index+1) * golden gamma
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace skewloci
