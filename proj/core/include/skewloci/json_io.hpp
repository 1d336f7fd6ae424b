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

#include <nlohmann/json.hpp>

#include "skewloci/lie.hpp"
#include "skewloci/qpolynomial.hpp"
#include "skewloci/strata.hpp"
#include "skewloci/subspace.hpp"

namespace skewloci {

// Wire formats.  All scalars are decimal fraction strings "num" or
// "num/den"; malformed input throws ParseError.
//
//   matrix      {"rows": R, "cols": C, "entries": [["1/2", ...], ...]}
//   polynomial  ["1", "0", "-3", ...]            (constant term first)
//   subspace    {"ambient": N, "basis": <matrix>}
//   skew space  {"N": n, "basis": [[strict upper triangle row by row], ...]}
//   Lie algebra {"name": str, "dim": N, "basis": [names],
//                "brackets": [{"i": a, "j": b, "out": {"k": "num/den"}}]}
//               with i < j mandatory and duplicate pairs rejected
//   covector    ["0", "1", ...]

nlohmann::json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SkewLinearSpace& space);
SkewLinearSpace skew_space_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LieAlgebraPresentation& algebra,
                       const std::string& name);
LieAlgebraPresentation lie_from_json(const nlohmann::json& j);

nlohmann::json covector_to_json(const Covector& lambda);
Covector covector_from_json(const nlohmann::json& j);

nlohmann::json rationals_to_json(const std::vector<Rational>& values);

}  // namespace skewloci
