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

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "brute.hpp"
#include "rrobust/exhaustive.hpp"
#include "rrobust/graph.hpp"

using rrobust::Digraph;
using rrobust::RobustnessPair;
using rrobust::VertexSubset;

namespace {

Digraph three_cycle() {
  return Digraph::from_edge_list(3, {{1, 2}, {2, 3}, {3, 1}});
}

// All simple digraphs on n vertices, one per subset of the n(n-1) ordered
// non-loop vertex pairs. Only sane for n <= 4.
std::vector<Digraph> all_digraphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<Digraph> out;
  for (std::uint64_t m = 0; m < (1ull << slots.size()); ++m) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if ((m >> b) & 1u) edges.push_back(slots[b]);
    out.push_back(Digraph::from_edge_list(n, edges));
  }
  return out;
}

Digraph star(int n) {  // all edges point from vertex 1 to the leaves
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return Digraph::from_edge_list(n, edges);
}

bool is_star(const Digraph& d) {
  for (auto [i, j] : d.edges())
    if (i != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("pairwise membership test on hand examples") {
  Digraph d = three_cycle();
  VertexSubset s1 = VertexSubset::of(3, {1});
  VertexSubset s2 = VertexSubset::of(3, {2});
  // Each singleton has its one in-neighbor outside, so both are fully
  // 1-reachable and no r=1 pair can fail regardless of s.
  CHECK(rrobust::robust_holds(d, s1, s2, 1, 3));
  // At r=2 neither side reaches and the combined count is 0.
  CHECK_FALSE(rrobust::robust_holds(d, s1, s2, 2, 1));
  CHECK(rrobust::robust_holds(d, s1, s2, 2, 0));

  Digraph k3 = brute::complete_graph(3);
  // In K_3, singletons have two outside in-neighbors each.
  CHECK(rrobust::robust_holds(k3, s1, s2, 2, 3));
}

TEST_CASE("pairwise membership test rejects malformed pairs") {
  Digraph d = three_cycle();
  VertexSubset empty = VertexSubset::of(3, {});
  VertexSubset s1 = VertexSubset::of(3, {1});
  VertexSubset s12 = VertexSubset::of(3, {1, 2});
  CHECK_THROWS_AS(rrobust::robust_holds(d, empty, s1, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(rrobust::robust_holds(d, s1, empty, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(rrobust::robust_holds(d, s1, s12, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(rrobust::robust_holds(d, s1, s12, -1, 1),
                  std::invalid_argument);
}

TEST_CASE("whole-graph membership on hand examples") {
  Digraph d = three_cycle();
  // With only three vertices every disjoint pair has a singleton side, and
  // cycle singletons are fully 1-reachable, so (1, s) holds for all s.
  CHECK(rrobust::rs_robust(d, 1, 1));
  CHECK(rrobust::rs_robust(d, 1, 3));
  CHECK_FALSE(rrobust::rs_robust(d, 2, 1));
  // The 4-cycle is pinned to s = 2 by opposite-arc pairs like {1,2},{3,4}.
  Digraph c4 = brute::directed_cycle(4);
  CHECK(rrobust::rs_robust(c4, 1, 2));
  CHECK_FALSE(rrobust::rs_robust(c4, 1, 3));
  CHECK_FALSE(rrobust::rs_robust(c4, 2, 1));

  Digraph k3 = brute::complete_graph(3);
  CHECK(rrobust::rs_robust(k3, 2, 3));

  // Star: every pair either contains a leaf-only side (fully 1-reachable) or
  // splits the hub from leaves, so (1, s) holds for every s.
  CHECK(rrobust::rs_robust(star(4), 1, 4));
}

TEST_CASE("full descent on hand examples") {
  CHECK(rrobust::determine_robustness(three_cycle()) ==
        RobustnessPair{1, 3});
  CHECK(rrobust::determine_robustness(brute::directed_cycle(4)) ==
        RobustnessPair{1, 2});
  CHECK(rrobust::determine_robustness(brute::complete_graph(3)) ==
        RobustnessPair{2, 3});
  CHECK(rrobust::determine_robustness(brute::complete_graph(5)) ==
        RobustnessPair{3, 5});
  CHECK(rrobust::determine_robustness(brute::complete_graph(6)) ==
        RobustnessPair{3, 6});
  CHECK(rrobust::determine_robustness(star(4)) == RobustnessPair{1, 4});
  CHECK(rrobust::determine_robustness(star(7)) == RobustnessPair{1, 7});
  // No edges at all: not even 1-robust, (0, n) by convention.
  CHECK(rrobust::determine_robustness(Digraph::from_edge_list(4, {})) ==
        RobustnessPair{0, 4});
  // Two disconnected 3-cycles: also 0-robust.
  Digraph two_cycles = Digraph::from_edge_list(
      6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
  CHECK(rrobust::determine_robustness(two_cycles) == RobustnessPair{0, 6});
  // Trivial graph conventions.
  Digraph one = Digraph::from_edge_list(1, {});
  CHECK(rrobust::determine_robustness(one) == RobustnessPair{1, 1});
  CHECK(rrobust::determine_rmax_exhaustive(one) == 1);
  CHECK(rrobust::smax_exhaustive(one, 1) == 1);
}

TEST_CASE("rooted trees that are not stars land at (1,1)") {
  // A path: the pair {child, grandchild} vs {root} pins s to 1.
  Digraph path = Digraph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(rrobust::determine_robustness(path) == RobustnessPair{1, 1});
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Digraph t = brute::random_rooted_tree(6, seed);
    if (is_star(t)) continue;
    INFO("seed " << seed);
    CHECK(rrobust::determine_robustness(t) == RobustnessPair{1, 1});
  }
}

TEST_CASE("r_max sweep on hand examples") {
  CHECK(rrobust::determine_rmax_exhaustive(three_cycle()) == 1);
  CHECK(rrobust::determine_rmax_exhaustive(brute::complete_graph(4)) == 2);
  CHECK(rrobust::determine_rmax_exhaustive(brute::complete_graph(5)) == 3);
  CHECK(rrobust::determine_rmax_exhaustive(Digraph::from_edge_list(4, {})) ==
        0);
}

TEST_CASE("s_max scan on hand examples") {
  Digraph d = three_cycle();
  CHECK(rrobust::smax_exhaustive(d, 0) == 3);  // r = 0 never constrains
  CHECK(rrobust::smax_exhaustive(d, 1) == 3);
  CHECK(rrobust::smax_exhaustive(d, 2) == 0);
  CHECK(rrobust::smax_exhaustive(brute::directed_cycle(4), 1) == 2);
  CHECK(rrobust::smax_exhaustive(brute::complete_graph(3), 2) == 3);
  CHECK_THROWS_AS(rrobust::smax_exhaustive(d, -1), std::invalid_argument);
  CHECK_THROWS_AS(rrobust::smax_exhaustive(d, 3), std::invalid_argument);
}

// The descent carries (r, s) across pairs in a single pass instead of
// restarting per candidate value. These sweeps check it against the naive
// per-definition search on every digraph small enough to enumerate, plus
// random larger ones.
TEST_CASE("descent agrees with naive search on every 3-vertex digraph") {
  for (const Digraph& d : all_digraphs(3)) {
    auto [br, bs] = brute::lexmax_pair(d);
    RobustnessPair got = rrobust::determine_robustness(d);
    INFO("edges " << d.edge_count());
    REQUIRE(got.r == br);
    REQUIRE(got.s == bs);
    REQUIRE(rrobust::determine_rmax_exhaustive(d) == br);
    for (int r = 0; r <= 2; ++r)
      REQUIRE(rrobust::smax_exhaustive(d, r) == brute::smax(d, r));
  }
}

TEST_CASE("descent agrees with naive search on every 4-vertex digraph") {
  for (const Digraph& d : all_digraphs(4)) {
    auto [br, bs] = brute::lexmax_pair(d);
    RobustnessPair got = rrobust::determine_robustness(d);
    REQUIRE(got.r == br);
    REQUIRE(got.s == bs);
    REQUIRE(rrobust::determine_rmax_exhaustive(d) == br);
    for (int r = 0; r <= 2; ++r)
      REQUIRE(rrobust::smax_exhaustive(d, r) == brute::smax(d, r));
  }
}

TEST_CASE("descent agrees with naive search on random 5-7 vertex digraphs") {
  struct Cell {
    int n;
    std::uint32_t percent;
    int trials;
  };
  for (Cell cell : {Cell{5, 30, 25}, Cell{5, 60, 25}, Cell{6, 40, 15},
                    Cell{7, 50, 8}}) {
    for (int t = 0; t < cell.trials; ++t) {
      std::uint64_t seed = 31ull * cell.n + 1009ull * cell.percent + t;
      Digraph d = brute::random_digraph(cell.n, cell.percent, seed);
      auto [br, bs] = brute::lexmax_pair(d);
      RobustnessPair got = rrobust::determine_robustness(d);
      INFO("n " << cell.n << " percent " << cell.percent << " seed " << seed);
      REQUIRE(got.r == br);
      REQUIRE(got.s == bs);
      REQUIRE(rrobust::determine_rmax_exhaustive(d) == br);
      if (br >= 1) REQUIRE(rrobust::smax_exhaustive(d, br) == bs);
    }
  }
}

TEST_CASE("membership is downward closed in r and s") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Digraph d = brute::random_digraph(5, 50, 4000 + seed);
    for (int r = 1; r <= 3; ++r) {
      for (int s = 1; s <= 5; ++s) {
        if (!rrobust::rs_robust(d, r, s)) continue;
        if (s > 1) CHECK(rrobust::rs_robust(d, r, s - 1));
        if (r > 1) CHECK(rrobust::rs_robust(d, r - 1, s));
      }
    }
  }
}

TEST_CASE("membership shifts from (r, s) to (r-1, s+1)") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Digraph d = brute::random_digraph(5, 50, 5000 + seed);
    for (int r = 2; r <= 3; ++r)
      for (int s = 1; s <= 4; ++s)
        if (rrobust::rs_robust(d, r, s))
          CHECK(rrobust::rs_robust(d, r - 1, s + 1));
  }
}

TEST_CASE("r-robustness is (r,1)-robustness") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Digraph d = brute::random_digraph(5, 55, 6000 + seed);
    for (int r = 0; r <= 3; ++r)
      CHECK(brute::is_r_robust(d, r) == rrobust::rs_robust(d, r, 1));
  }
}
