// Copyright 2026 The rrobust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Test-only reference evaluation of the model family: enumerate every binary
// assignment, derive the single continuous column when present, and keep the
// feasible minimum. Exponential in the binary count; callers keep instances
// small.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rrobust/milp.hpp"

namespace milp_brute {

struct Result {
  bool feasible = false;
  long long value = 0;                // includes the objective offset
  std::vector<long long> point;       // full column vector of an optimum
};

// Handles exactly the shapes the builders produce: at most one continuous
// column, which must be column 0 with objective weight 1, lower bound 0, no
// upper bound, and which appears only with coefficient -1 in <= rows (so its
// optimal value is the max row excess).
inline Result enumerate_milp(const rrobust::MilpProblem& p) {
  rrobust::validate(p);
  if (p.num_continuous > 1)
    throw std::invalid_argument("enumerator supports at most one continuous");
  const bool has_t = p.num_continuous == 1;
  if (has_t &&
      (p.objective[0] != 1 || p.bounds[0].lower != 0 || p.bounds[0].upper))
    throw std::invalid_argument("unexpected continuous column shape");
  for (const rrobust::Row& row : p.rows) {
    if (!has_t) break;
    if (row.coef[0] == 0) continue;
    if (row.coef[0] != -1 || row.rel != rrobust::Rel::LessEq)
      throw std::invalid_argument("unexpected use of the continuous column");
  }
  const int nb = p.num_binary;
  if (nb > 24) throw std::invalid_argument("too many binaries to enumerate");
  const int base = p.num_continuous;

  Result best;
  for (std::uint64_t mask = 0; mask < (1ull << nb); ++mask) {
    bool feasible = true;
    long long tmin = 0;
    for (const rrobust::Row& row : p.rows) {
      long long dot = 0;
      for (int c = 0; c < nb; ++c)
        if ((mask >> c) & 1u) dot += row.coef[std::size_t(base + c)];
      if (has_t && row.coef[0] == -1) {
        tmin = std::max(tmin, dot - row.rhs);  // dot - t <= rhs
        continue;
      }
      switch (row.rel) {
        case rrobust::Rel::LessEq: feasible = dot <= row.rhs; break;
        case rrobust::Rel::GreaterEq: feasible = dot >= row.rhs; break;
        case rrobust::Rel::Equal: feasible = dot == row.rhs; break;
      }
      if (!feasible) break;
    }
    if (!feasible) continue;
    long long value = p.objective_offset + (has_t ? tmin : 0);
    for (int c = 0; c < nb; ++c)
      if ((mask >> c) & 1u) value += p.objective[std::size_t(base + c)];
    if (!best.feasible || value < best.value) {
      best.feasible = true;
      best.value = value;
      best.point.assign(std::size_t(p.num_cols()), 0);
      if (has_t) best.point[0] = tmin;
      for (int c = 0; c < nb; ++c)
        best.point[std::size_t(base + c)] = (mask >> c) & 1u;
    }
  }
  return best;
}

}  // namespace milp_brute
