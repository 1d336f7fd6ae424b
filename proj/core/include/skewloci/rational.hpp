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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace skewloci {

// Exact arbitrary-precision scalars.  mpq_class is kept canonical by GMP:
// gcd(|num|, den) = 1, den > 0, zero is 0/1 — exactly the invariants the
// rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational from an integer pair.  Throws PreconditionError
/// if den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "num" or "num/den" with decimal integers, canonicalizing the result.
/// Throws ParseError on malformed text or a zero denominator.
Rational rational_from_string(std::string_view text);

/// Formats as "num" or "num/den" (the inverse of rational_from_string).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

std::string to_string(const std::vector<Rational>& values);

}  // namespace skewloci
