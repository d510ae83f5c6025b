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

// Seeded generators for four random-graph families:
//
//   ErdosRenyiUndirected  every unordered pair {i,j} is included with
//                         probability p as the bidirectional edge pair.
//   RandomDigraph         every ordered pair (i,j) is included independently
//                         with probability p.
//   KOut                  every vertex selects k distinct other vertices
//                         uniformly without replacement and points at them.
//   KIn                   same selection process with all edges reversed, so
//                         every vertex is pointed at by k random others.
//
// Reproducibility contract. Output is a pure function of (family, n, p|k,
// seed). The random stream is std::mt19937_64 seeded directly with the
// 64-bit seed, consumed in a fixed order: vertices ascending, candidate
// pairs lexicographic. Raw 64-bit draws are mapped as follows:
//   * probability-p coin:  ((x >> 11) * 2^-53) < p   (53-bit double mantissa)
//   * uniform index in [0,m): modulo rejection — reject x < 2^64 mod m,
//     otherwise return x % m (one draw consumed per attempt)
//   * k-subset of the other vertices: partial Fisher-Yates shuffle of the
//     ascending candidate list, k swap positions drawn left to right.
// Since the mt19937_64 output sequence is fixed by its specification, the
// same spec yields a byte-identical edge list anywhere.

#ifndef RROBUST_RANDOM_GRAPHS_HPP_
#define RROBUST_RANDOM_GRAPHS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrobust/graph.hpp"

namespace rrobust {

enum class GraphFamily { ErdosRenyiUndirected, RandomDigraph, KOut, KIn };

inline std::string_view family_name(GraphFamily f) {
  switch (f) {
    case GraphFamily::ErdosRenyiUndirected: return "er";
    case GraphFamily::RandomDigraph: return "digraph";
    case GraphFamily::KOut: return "kout";
    case GraphFamily::KIn: return "kin";
  }
  return "?";
}

inline std::optional<GraphFamily> family_from_name(std::string_view s) {
  if (s == "er") return GraphFamily::ErdosRenyiUndirected;
  if (s == "digraph") return GraphFamily::RandomDigraph;
  if (s == "kout") return GraphFamily::KOut;
  if (s == "kin") return GraphFamily::KIn;
  return std::nullopt;
}

struct GenSpec {
  GraphFamily family = GraphFamily::RandomDigraph;
  int n = 1;
  double p = 0.5;       // edge probability (er / digraph families)
  int k = 1;            // selections per vertex (kout / kin families)
  std::uint64_t seed = 0;
};

namespace detail {

inline bool coin(std::mt19937_64& rng, double p) {
  const double u = double(rng() >> 11) * 0x1.0p-53;  // uniform in [0, 1)
  return u < p;
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t m) {
  // 2^64 mod m, computed as (2^64 - m) mod m via unsigned wraparound.
  const std::uint64_t reject = (0 - m) % m;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= reject) return x % m;
  }
}

// The k lowest slots of a partial Fisher-Yates shuffle over every vertex
// except `self`, candidates listed in ascending order.
inline std::vector<int> pick_k_others(std::mt19937_64& rng, int n, int self,
                                      int k) {
  std::vector<int> cand;
  cand.reserve(std::size_t(n) - 1);
  for (int v = 1; v <= n; ++v)
    if (v != self) cand.push_back(v);
  for (int t = 0; t < k; ++t) {
    const std::uint64_t span = cand.size() - std::size_t(t);
    const std::size_t j = std::size_t(t) + std::size_t(below(rng, span));
    std::swap(cand[std::size_t(t)], cand[j]);
  }
  cand.resize(std::size_t(k));
  return cand;
}

}  // namespace detail

inline Digraph generate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
  const bool probabilistic = spec.family == GraphFamily::ErdosRenyiUndirected ||
                             spec.family == GraphFamily::RandomDigraph;
  if (probabilistic && !(spec.p >= 0.0 && spec.p <= 1.0))
    throw std::invalid_argument("generate: p must lie in [0, 1]");
  if (!probabilistic && (spec.k < 1 || spec.k > spec.n - 1))
    throw std::invalid_argument("generate: k must lie in [1, n - 1]");

  std::mt19937_64 rng(spec.seed);
  std::vector<std::pair<int, int>> edges;

  switch (spec.family) {
    case GraphFamily::ErdosRenyiUndirected:
      for (int i = 1; i <= spec.n; ++i)
        for (int j = i + 1; j <= spec.n; ++j)
          if (detail::coin(rng, spec.p)) {
            edges.push_back({i, j});
            edges.push_back({j, i});
          }
      break;
    case GraphFamily::RandomDigraph:
      for (int i = 1; i <= spec.n; ++i)
        for (int j = 1; j <= spec.n; ++j)
          if (i != j && detail::coin(rng, spec.p)) edges.push_back({i, j});
      break;
    case GraphFamily::KOut:
    case GraphFamily::KIn:
      for (int i = 1; i <= spec.n; ++i)
        for (int j : detail::pick_k_others(rng, spec.n, i, spec.k)) {
          if (spec.family == GraphFamily::KOut)
            edges.push_back({i, j});
          else
            edges.push_back({j, i});
        }
      break;
  }
  return Digraph::from_edge_list(spec.n, edges);
}

}  // namespace rrobust

#endif  // RROBUST_RANDOM_GRAPHS_HPP_
