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

#include <cstdint>
#include <stdexcept>

#include "rrobust/graph.hpp"

// Exhaustive ground-truth algorithms. These enumerate subset pairs directly
// and are exponential by design; they exist to validate the MILP pipeline,
// not to scale. Practical up to n of about 12.

namespace rrobust {

struct RobustnessPair {
  int r = 0;
  int s = 0;
  friend bool operator==(const RobustnessPair&, const RobustnessPair&) =
      default;
};

// The (r,s) membership test for one pair: true iff every vertex of S1 has r
// in-neighbors outside S1, or every vertex of S2 does w.r.t. S2, or at least
// s vertices across both sets do.
inline bool robust_holds(const Digraph& d, const VertexSubset& s1,
                         const VertexSubset& s2, int r, int s) {
  if (s1.empty() || s2.empty())
    throw std::invalid_argument("subsets must be nonempty");
  if ((s1.bits & s2.bits) != 0)
    throw std::invalid_argument("subsets must be disjoint");
  if (r < 0 || s < 0) throw std::invalid_argument("r and s must be >= 0");
  const int x1 = r_reachable_set(d, s1, r).size();
  if (x1 == s1.size()) return true;
  const int x2 = r_reachable_set(d, s2, r).size();
  return x2 == s2.size() || x1 + x2 >= s;
}

// Whole-graph (r,s) membership: the disjunction above must hold for every
// nonempty disjoint pair. The conditions are symmetric in (S1,S2), so only
// unordered pairs are checked (half the ordered-pair count).
inline bool rs_robust(const Digraph& d, int r, int s) {
  const int n = d.n();
  if (n == 1) return r <= 1;  // the trivial graph is 1-robust by convention
  const std::uint64_t full = VertexSubset::full(n).bits;
  // Unordered pairs: for every union K of size >= 2, split off the lowest
  // member into side 1 and enumerate the 2^(|K|-1) - 1 two-part partitions.
  for (std::uint64_t u = 3; u <= full; ++u) {
    if (std::popcount(u) < 2) continue;
    const std::uint64_t low = u & (0 - u);  // lowest member stays on side 1
    const std::uint64_t rest = u & ~low;
    // s2 runs over the nonempty submasks of rest (ascending).
    for (std::uint64_t s2 = (0 - rest) & rest; s2 != 0;
         s2 = (s2 - rest) & rest) {
      VertexSubset a{n, u & ~s2};
      VertexSubset b{n, s2};
      if (!robust_holds(d, a, b, r, s)) return false;
    }
  }
  return true;
}

namespace detail {

// Shared sweep over all unordered nonempty disjoint pairs, in ascending
// union-size order, carrying (r,s) downward. `s_reset` is what s returns to
// whenever r is decremented (and also the initial s value).
//
// Note on the loop flags: the procedure keeps a single "latest membership
// test result" flag. The inner loop walks s down at fixed r until the test
// passes or s runs out; the outer loop then decrements r, resets s, and
// tries again. The first failed test for a pair also costs one s step before
// the loops engage.
inline RobustnessPair robustness_sweep(const Digraph& d, int s_reset) {
  const int n = d.n();
  int r = std::min(std::max(min_in_degree(d), 1), (n + 1) / 2);
  int s = s_reset;
  const std::uint64_t full = VertexSubset::full(n).bits;
  for (int k = 2; k <= n; ++k) {
    // Subsets of size k in ascending mask order (Gosper's hack).
    std::uint64_t ki = (1ull << k) - 1;
    while (ki <= full) {
      const std::uint64_t low = ki & (0 - ki);
      const std::uint64_t rest = ki & ~low;
      for (std::uint64_t t = (0 - rest) & rest; t != 0;
           t = (t - rest) & rest) {
        VertexSubset s1{n, ki & ~t};
        VertexSubset s2{n, t};
        bool robust = robust_holds(d, s1, s2, r, s);
        if (!robust && s > 0) --s;
        while (!robust && r > 0) {
          while (!robust && s > 0) {
            robust = robust_holds(d, s1, s2, r, s);
            if (!robust) --s;
          }
          if (!robust) {
            --r;
            s = s_reset;
          }
        }
        if (r == 0) return {r, s};  // nothing below 0-robust exists
      }
      // Next mask with k bits set.
      const std::uint64_t c = ki & (0 - ki);
      const std::uint64_t rr = ki + c;
      if (rr == 0) break;
      ki = (((ki ^ rr) >> 2) / c) | rr;
    }
  }
  return {r, s};
}

}  // namespace detail

// Largest s in [1, n] with (r, s) robust for the given r, scanning s
// downward with a full pair check per candidate; 0 if not even s = 1 holds,
// n by convention when r = 0.
inline int smax_exhaustive(const Digraph& d, int r) {
  const int n = d.n();
  if (r < 0 || r > (n + 1) / 2)
    throw std::invalid_argument("r outside [0, ceil(n/2)]");
  if (r == 0 || n == 1) return n;
  for (int s = n; s >= 1; --s)
    if (rs_robust(d, r, s)) return s;
  return 0;
}

// Lexicographic maximum (r*, s*): r* is the largest r the graph is r-robust
// for, s* the largest s it is (r*, s)-robust for. The descending sweep pins
// down the radius (it starts from r = min(max(min in-degree, 1), ceil(n/2))
// so graphs whose only in-degree-0 vertex is a tree root are still probed at
// r = 1). The separation value is then re-determined at that fixed radius:
// the sweep's own s is not trustworthy, because a pair it examined before
// the final radius decrement was only held to the pre-reset s and may cap
// the post-reset value — satisfying a coverage demand of 4 at some radius
// says nothing about covering 7 vertices at a smaller one.
inline RobustnessPair determine_robustness(const Digraph& d) {
  if (d.n() == 1) return {1, 1};  // trivial graph: 1-robust, s capped at n
  const RobustnessPair swept = detail::robustness_sweep(d, d.n());
  if (swept.r == 0) return swept;  // (0, n): separation is vacuous below r = 1
  return {swept.r, smax_exhaustive(d, swept.r)};
}

// r_max only: identical sweep but s pinned to 1 (r-robustness is
// (r,1)-robustness), which terminates the moment any pair proves two
// 0-reachable sets exist.
inline int determine_rmax_exhaustive(const Digraph& d) {
  if (d.n() == 1) return 1;
  return detail::robustness_sweep(d, 1).r;
}

// Largest F such that the graph is (F+1, F+1)-robust: walk r downward from
// r_max until s_max(r) catches up with r. Zero when not even (1,1) holds.
inline int fmax_exhaustive(const Digraph& d) {
  for (int r = determine_rmax_exhaustive(d); r > 0; --r)
    if (smax_exhaustive(d, r) >= r) return r - 1;
  return 0;
}

}  // namespace rrobust
