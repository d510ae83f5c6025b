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

// Deliberately naive reference implementations used only by tests. They work
// from the definitions with std::set arithmetic and share no code with the
// library's bitmask path, so agreement between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "rrobust/graph.hpp"

namespace brute {

using Vset = std::set<int>;  // 1-based vertex ids

inline std::vector<Vset> all_subsets(int n) {
  std::vector<Vset> out;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    Vset s;
    for (int v = 1; v <= n; ++v)
      if ((m >> (v - 1)) & 1u) s.insert(v);
    out.push_back(std::move(s));
  }
  return out;
}

inline Vset in_neighbors(const rrobust::Digraph& d, int j) {
  Vset s;
  for (int i = 1; i <= d.n(); ++i)
    if (i != j && d.has_edge(i, j)) s.insert(i);
  return s;
}

// |N_j \ S| computed with set_difference.
inline int outside_in_degree(const rrobust::Digraph& d, int j, const Vset& s) {
  Vset nj = in_neighbors(d, j);
  Vset diff;
  std::set_difference(nj.begin(), nj.end(), s.begin(), s.end(),
                      std::inserter(diff, diff.begin()));
  return int(diff.size());
}

// Vertices of S with at least r in-neighbors outside S.
inline Vset reachable_members(const rrobust::Digraph& d, const Vset& s,
                              int r) {
  Vset x;
  for (int j : s)
    if (outside_in_degree(d, j, s) >= r) x.insert(j);
  return x;
}

inline bool disjoint(const Vset& a, const Vset& b) {
  Vset inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(inter, inter.begin()));
  return inter.empty();
}

// r-robust straight from the definition: every nonempty disjoint pair has at
// least one r-reachable member set.
inline bool is_r_robust(const rrobust::Digraph& d, int r) {
  auto subsets = all_subsets(d.n());
  for (const auto& s1 : subsets) {
    if (s1.empty()) continue;
    for (const auto& s2 : subsets) {
      if (s2.empty() || !disjoint(s1, s2)) continue;
      bool s1_reaches = !reachable_members(d, s1, r).empty();
      bool s2_reaches = !reachable_members(d, s2, r).empty();
      if (!s1_reaches && !s2_reaches) return false;
    }
  }
  return true;
}

inline int rmax(const rrobust::Digraph& d) {
  if (d.n() == 1) return 1;
  int best = 0;
  for (int r = 0; r <= (d.n() + 1) / 2; ++r)
    if (is_r_robust(d, r)) best = r;
  return best;
}

// Largest workable s for a fixed r, via the per-pair cap: a pair allows any s
// if one side is fully r-reachable, otherwise s at most |X1| + |X2|.
inline int smax(const rrobust::Digraph& d, int r) {
  const int n = d.n();
  if (r == 0 || n == 1) return n;
  int cap = n;
  auto subsets = all_subsets(n);
  for (const auto& s1 : subsets) {
    if (s1.empty()) continue;
    for (const auto& s2 : subsets) {
      if (s2.empty() || !disjoint(s1, s2)) continue;
      auto x1 = reachable_members(d, s1, r);
      auto x2 = reachable_members(d, s2, r);
      if (x1.size() == s1.size() || x2.size() == s2.size()) continue;
      cap = std::min(cap, int(x1.size() + x2.size()));
    }
  }
  return cap;
}

inline std::pair<int, int> lexmax_pair(const rrobust::Digraph& d) {
  int r = rmax(d);
  if (r == 0) return {0, d.n()};
  return {r, smax(d, r)};
}

// Tiny deterministic generator for test graphs (split-mix style), separate
// from the library's seeded generators on purpose.
struct TestRng {
  std::uint64_t state;
  explicit TestRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // true with probability roughly num/den
  bool chance(std::uint32_t num, std::uint32_t den) {
    return next() % den < num;
  }
};

inline rrobust::Digraph random_digraph(int n, std::uint32_t percent,
                                       std::uint64_t seed) {
  TestRng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && rng.chance(percent, 100)) edges.emplace_back(i, j);
  return rrobust::Digraph::from_edge_list(n, edges);
}

inline rrobust::Digraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) edges.emplace_back(i, j);
  return rrobust::Digraph::from_edge_list(n, edges);
}

inline rrobust::Digraph directed_cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return rrobust::Digraph::from_edge_list(n, edges);
}

// Rooted directed spanning tree: vertex 1 is the root (in-degree 0), every
// other vertex gets exactly one in-edge from an earlier vertex.
inline rrobust::Digraph random_rooted_tree(int n, std::uint64_t seed) {
  TestRng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) {
    int parent = 1 + int(rng.next() % std::uint64_t(v - 1));
    edges.emplace_back(parent, v);
  }
  return rrobust::Digraph::from_edge_list(n, edges);
}

}  // namespace brute
