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

#include "skewloci/json_io.hpp"

#include <utility>

namespace skewloci {

using nlohmann::json;

namespace {

Rational parse_fraction(const json& j, const char* what) {
  if (!j.is_string()) {
    throw ParseError(std::string(what) + ": expected a fraction string");
  }
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::size_t parse_count(const json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    throw ParseError(std::string(what) + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

RationalMatrix matrix_from_json(const json& j) {
  const std::size_t rows = parse_count(require(j, "rows"), "rows");
  const std::size_t cols = parse_count(require(j, "cols"), "cols");
  const json& entries = require(j, "entries");
  if (!entries.is_array() || entries.size() != rows) {
    throw ParseError("entries: expected one array per row");
  }
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("entries: row has wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(i, c) = parse_fraction(row[c], "matrix entry");
    }
  }
  return m;
}

json to_json(const QPolynomial& p) {
  json out = json::array();
  for (const Integer& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

QPolynomial qpolynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array");
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const json& c : j) {
    const Rational q = parse_fraction(c, "polynomial coefficient");
    if (q.get_den() != 1) {
      throw ParseError("polynomial coefficient must be an integer");
    }
    coeffs.push_back(q.get_num());
  }
  return QPolynomial(std::move(coeffs));
}

json to_json(const Subspace& s) {
  return json{{"ambient", s.ambient()}, {"basis", to_json(s.basis())}};
}

Subspace subspace_from_json(const json& j) {
  const std::size_t ambient = parse_count(require(j, "ambient"), "ambient");
  return Subspace::from_rows(ambient, matrix_from_json(require(j, "basis")));
}

json to_json(const SkewLinearSpace& space) {
  json basis = json::array();
  for (const SkewMatrix& b : space.basis()) {
    json upper = json::array();
    for (const Rational& q : b.strict_upper()) upper.push_back(to_string(q));
    basis.push_back(std::move(upper));
  }
  return json{{"N", space.matrix_size()}, {"basis", basis}};
}

SkewLinearSpace skew_space_from_json(const json& j) {
  const std::size_t n = parse_count(require(j, "N"), "N");
  const json& basis = require(j, "basis");
  if (!basis.is_array()) throw ParseError("basis: expected an array");
  std::vector<SkewMatrix> matrices;
  matrices.reserve(basis.size());
  for (const json& upper : basis) {
    if (!upper.is_array()) throw ParseError("basis element: expected an array");
    std::vector<Rational> entries;
    entries.reserve(upper.size());
    for (const json& q : upper) {
      entries.push_back(parse_fraction(q, "basis entry"));
    }
    try {
      matrices.push_back(SkewMatrix::from_strict_upper(n, entries));
    } catch (const DimensionError& e) {
      throw ParseError(std::string("basis element: ") + e.what());
    }
  }
  try {
    return SkewLinearSpace(n, std::move(matrices));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("skew space: ") + e.what());
  }
}

json to_json(const LieAlgebraPresentation& algebra, const std::string& name) {
  const std::size_t n = algebra.dim();
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      json out = json::object();
      for (std::size_t k = 0; k < n; ++k) {
        const Rational c = algebra.structure_constant(i, j, k);
        if (c != 0) out[std::to_string(k)] = to_string(c);
      }
      if (!out.empty()) {
        brackets.push_back(json{{"i", i}, {"j", j}, {"out", out}});
      }
    }
  }
  return json{{"name", name},
              {"dim", n},
              {"basis", algebra.basis_names()},
              {"brackets", brackets}};
}

LieAlgebraPresentation lie_from_json(const json& j) {
  const std::size_t n = parse_count(require(j, "dim"), "dim");
  const json& names_json = require(j, "basis");
  if (!names_json.is_array() || names_json.size() != n) {
    throw ParseError("basis: expected dim names");
  }
  std::vector<std::string> names;
  for (const json& name : names_json) {
    if (!name.is_string()) throw ParseError("basis names must be strings");
    names.push_back(name.get<std::string>());
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>
      brackets;
  const json& entries = require(j, "brackets");
  if (!entries.is_array()) throw ParseError("brackets: expected an array");
  for (const json& entry : entries) {
    const std::size_t i = parse_count(require(entry, "i"), "bracket i");
    const std::size_t jj = parse_count(require(entry, "j"), "bracket j");
    if (i >= jj) {
      // Symmetric or diagonal redundancy is rejected, not normalized: the
      // i < j entries are the single source of truth.
      throw ParseError("brackets require i < j");
    }
    if (jj >= n) throw ParseError("bracket index out of range");
    if (brackets.contains({i, jj})) {
      throw ParseError("duplicate bracket pair");
    }
    const json& out = require(entry, "out");
    if (!out.is_object()) throw ParseError("bracket out: expected an object");
    std::vector<Rational> value(n);
    for (const auto& [key, coeff] : out.items()) {
      std::size_t k = 0;
      try {
        std::size_t pos = 0;
        k = std::stoul(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("bracket out: keys must be basis indices");
      }
      if (k >= n) throw ParseError("bracket out: index out of range");
      value[k] = parse_fraction(coeff, "bracket coefficient");
    }
    brackets.emplace(std::make_pair(i, jj), std::move(value));
  }
  return LieAlgebraPresentation(std::move(names), std::move(brackets));
}

json covector_to_json(const Covector& lambda) {
  json out = json::array();
  for (const Rational& q : lambda) out.push_back(to_string(q));
  return out;
}

Covector covector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("covector: expected an array");
  Covector out;
  out.reserve(j.size());
  for (const json& q : j) out.push_back(parse_fraction(q, "covector entry"));
  return out;
}

json rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& q : values) out.push_back(to_string(q));
  return out;
}

}  // namespace skewloci
