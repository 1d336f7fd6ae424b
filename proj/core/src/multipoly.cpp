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

#include "multipoly.hpp"

#include <algorithm>

namespace skewloci::detail {

void MultiPoly::add_term(const std::vector<unsigned>& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(std::vector<unsigned>(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  MultiPoly p(nvars);
  std::vector<unsigned> exps(nvars, 0);
  exps[index] = 1;
  p.add_term(exps, Rational(1));
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  out += other;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  for (const auto& [exps, c] : other.terms_) out.add_term(exps, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  MultiPoly out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      std::vector<unsigned> exps(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, ca * cb);
    }
  }
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < exps[i]; ++e) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

unsigned MultiPoly::max_variable_degree() const {
  unsigned best = 0;
  for (const auto& [exps, c] : terms_) {
    for (unsigned e : exps) best = std::max(best, e);
  }
  return best;
}

MultiPoly symbolic_pfaffian(
    const std::vector<std::vector<MultiPoly>>& upper_entries,
    std::uint64_t mask, std::size_t nvars,
    std::map<std::uint64_t, MultiPoly>& memo) {
  if (mask == 0) return MultiPoly::constant(nvars, Rational(1));
  if (auto it = memo.find(mask); it != memo.end()) return it->second;

  const int first = __builtin_ctzll(mask);
  const std::uint64_t rest = mask & ~(1ULL << first);
  MultiPoly sum(nvars);
  int position = 0;
  for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
    const int j = __builtin_ctzll(bits);
    const MultiPoly& entry =
        upper_entries[static_cast<std::size_t>(first)]
                     [static_cast<std::size_t>(j)];
    if (!entry.is_zero()) {
      const MultiPoly sub =
          symbolic_pfaffian(upper_entries, rest & ~(1ULL << j), nvars, memo);
      if (position % 2 == 0) {
        sum += entry * sub;
      } else {
        sum += (MultiPoly::constant(nvars, Rational(-1)) * entry) * sub;
      }
    }
    ++position;
  }
  memo.emplace(mask, sum);
  return sum;
}

}  // namespace skewloci::detail
